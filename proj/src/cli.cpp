#include "semires/cli.hpp"

#include <limits>

#include "semires/solver.hpp"

namespace semires::cli {

namespace {

const json& require_field(const json& doc, const char* name)
{
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return *it;
}

std::optional<Payload> optional_vector(const json& doc, const char* name, SemiringTag tag, Kind kind)
{
    auto it = doc.find(name);
    if (it == doc.end() || it->is_null()) {
        return std::nullopt;
    }
    return vector_from_json(tag, kind, *it);
}

Kind parse_kind(const json& j)
{
    if (!j.is_string()) {
        throw ParseError("'kind' must be a string");
    }
    const auto& s = j.get_ref<const std::string&>();
    if (s == "point") {
        return Kind::Point;
    }
    if (s == "interval") {
        return Kind::Interval;
    }
    throw ParseError("unknown kind '" + s + "' (expected point or interval)");
}

const char* kind_name(Kind k) { return k == Kind::Point ? "point" : "interval"; }

json header(const Problem& p)
{
    json out = json::object();
    out["semiring"] = std::string(to_string(p.semiring));
    out["kind"] = kind_name(p.kind);
    return out;
}

template <typename M>
json solve_impl(const Problem& p, const M& a, const M& b)
{
    SolveOptions options;
    if (p.max_iter) {
        options.max_iter = *p.max_iter;
    }
    options.keep_trace = p.trace;
    const M x0 = p.x0 ? std::get<M>(*p.x0) : default_start(a);
    const auto outcome = solve_two_sided(a, b, x0, options);

    json out = header(p);
    out["status"] = to_string(outcome.status);
    out["iterations"] = outcome.iterations;
    out["x"] = vector_to_json(outcome.x);
    if (outcome.y) {
        out["y"] = vector_to_json(*outcome.y);
        out["verified"] = verify_two_sided(a, b, outcome.x, *outcome.y);
    }
    if (p.trace) {
        json trace = json::array();
        for (const auto& step : outcome.trace) {
            trace.push_back(vector_to_json(step));
        }
        out["trace"] = std::move(trace);
    }
    return out;
}

}  // namespace

json scalar_to_json(Scalar s)
{
    if (s.is_finite()) {
        return s.value();
    }
    return to_string(s);
}

Scalar scalar_from_json(const json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() &&
            j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Scalar::value_type>::max())) {
            throw ParseError("integer literal out of range: " + j.dump());
        }
        return Scalar::finite(j.get<Scalar::value_type>());
    }
    if (j.is_string()) {
        return parse_scalar(j.get_ref<const std::string&>());
    }
    throw ParseError("expected a scalar (integer, \"-inf\" or \"+inf\"), got " + j.dump());
}

json interval_to_json(const Interval& x)
{
    return json::array({scalar_to_json(x.lower()), scalar_to_json(x.upper())});
}

Interval interval_from_json(SemiringTag tag, const json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ParseError("interval must be a two-element array, got " + j.dump());
        }
        return Interval(tag, scalar_from_json(j[0]), scalar_from_json(j[1]));
    }
    return Interval::degenerate(tag, scalar_from_json(j));
}

json matrix_to_json(const Payload& m)
{
    return std::visit(
        [](const auto& mat) {
            json rows = json::array();
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < mat.cols(); ++j) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(mat)>, Matrix>) {
                        row.push_back(scalar_to_json(mat(i, j)));
                    } else {
                        row.push_back(interval_to_json(mat(i, j)));
                    }
                }
                rows.push_back(std::move(row));
            }
            return rows;
        },
        m);
}

Payload matrix_from_json(SemiringTag tag, Kind kind, const json& j)
{
    if (!j.is_array() || j.empty()) {
        throw ParseError("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) {
            throw ParseError("matrix row must be a non-empty array, got " + row.dump());
        }
        if (cols == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw DimensionError("ragged matrix: rows of length " + std::to_string(cols) + " and " +
                                 std::to_string(row.size()));
        }
    }
    if (kind == Kind::Point) {
        std::vector<Scalar> entries;
        entries.reserve(rows * cols);
        for (const auto& row : j) {
            for (const auto& e : row) {
                entries.push_back(scalar_from_json(e));
            }
        }
        return Matrix(tag, rows, cols, std::move(entries));
    }
    std::vector<Interval> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        for (const auto& e : row) {
            entries.push_back(interval_from_json(tag, e));
        }
    }
    return IntervalMatrix(tag, rows, cols, std::move(entries));
}

json vector_to_json(const Payload& v)
{
    return std::visit(
        [](const auto& mat) {
            if (mat.cols() != 1) {
                throw DimensionError("vector_to_json: expected a column vector");
            }
            json out = json::array();
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                if constexpr (std::is_same_v<std::decay_t<decltype(mat)>, Matrix>) {
                    out.push_back(scalar_to_json(mat(i, 0)));
                } else {
                    out.push_back(interval_to_json(mat(i, 0)));
                }
            }
            return out;
        },
        v);
}

Payload vector_from_json(SemiringTag tag, Kind kind, const json& j)
{
    if (!j.is_array() || j.empty()) {
        throw ParseError("vector must be a non-empty array of entries");
    }
    if (kind == Kind::Point) {
        std::vector<Scalar> entries;
        for (const auto& e : j) {
            entries.push_back(scalar_from_json(e));
        }
        return Matrix::column(tag, std::move(entries));
    }
    std::vector<Interval> entries;
    for (const auto& e : j) {
        entries.push_back(interval_from_json(tag, e));
    }
    return IntervalMatrix::column(tag, std::move(entries));
}

Problem parse_problem(const json& doc, std::optional<SemiringTag> semiring_override)
{
    if (!doc.is_object()) {
        throw ParseError("problem file must be a JSON object");
    }
    SemiringTag tag = SemiringTag::MaxPlus;
    if (semiring_override) {
        tag = *semiring_override;
    } else {
        const json& s = require_field(doc, "semiring");
        if (!s.is_string()) {
            throw ParseError("'semiring' must be a string");
        }
        tag = parse_tag(s.get_ref<const std::string&>());
    }
    const Kind kind = doc.contains("kind") ? parse_kind(doc["kind"]) : Kind::Point;

    Problem p{tag,
              kind,
              matrix_from_json(tag, kind, require_field(doc, "A")),
              matrix_from_json(tag, kind, require_field(doc, "B")),
              optional_vector(doc, "x0", tag, kind),
              optional_vector(doc, "x", tag, kind),
              optional_vector(doc, "y", tag, kind),
              std::nullopt,
              false};

    if (auto it = doc.find("max_iter"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() < 1) {
            throw ParseError("'max_iter' must be a positive integer");
        }
        p.max_iter = it->get<std::size_t>();
    }
    if (auto it = doc.find("trace"); it != doc.end() && !it->is_null()) {
        if (!it->is_boolean()) {
            throw ParseError("'trace' must be a boolean");
        }
        p.trace = it->get<bool>();
    }
    return p;
}

json serialize_problem(const Problem& p)
{
    json out = header(p);
    out["A"] = matrix_to_json(p.a);
    out["B"] = matrix_to_json(p.b);
    if (p.x0) {
        out["x0"] = vector_to_json(*p.x0);
    }
    if (p.x) {
        out["x"] = vector_to_json(*p.x);
    }
    if (p.y) {
        out["y"] = vector_to_json(*p.y);
    }
    if (p.max_iter) {
        out["max_iter"] = *p.max_iter;
    }
    if (p.trace) {
        out["trace"] = true;
    }
    return out;
}

json run_residuate(const Problem& p)
{
    json out = header(p);
    std::visit(
        [&](const auto& a) {
            using M = std::decay_t<decltype(a)>;
            const M& b = std::get<M>(p.b);
            const M x = left_residual(a, b);
            out["X"] = matrix_to_json(x);
            out["equality"] = mul(a, x) == b;
        },
        p.a);
    return out;
}

json run_solve(const Problem& p)
{
    return std::visit(
        [&](const auto& a) {
            using M = std::decay_t<decltype(a)>;
            return solve_impl(p, a, std::get<M>(p.b));
        },
        p.a);
}

json run_check(const Problem& p)
{
    if (!p.x || !p.y) {
        throw ParseError("check requires both 'x' and 'y'");
    }
    json out = header(p);
    std::visit(
        [&](const auto& a) {
            using M = std::decay_t<decltype(a)>;
            const M& b = std::get<M>(p.b);
            const M lhs = mul(a, std::get<M>(*p.x));
            const M rhs = mul(b, std::get<M>(*p.y));
            out["lhs"] = vector_to_json(lhs);
            out["rhs"] = vector_to_json(rhs);
            out["verified"] = lhs == rhs;
        },
        p.a);
    return out;
}

int exit_code_for(const std::exception& e) noexcept
{
    if (dynamic_cast<const OverflowError*>(&e) != nullptr) {
        return OverflowFailure;
    }
    if (dynamic_cast<const DimensionError*>(&e) != nullptr || dynamic_cast<const TagMismatchError*>(&e) != nullptr) {
        return DimensionFailure;
    }
    return ParseFailure;
}

}  // namespace semires::cli
