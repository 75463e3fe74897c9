#ifndef SEMIRES_CLI_HPP
#define SEMIRES_CLI_HPP

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "semires/interval.hpp"
#include "semires/matrix.hpp"

// Problem-file parsing, result serialization and the three commands behind
// the `semires` executable. See docs/file-format.md for the schema.

namespace semires::cli {

using json = nlohmann::json;

enum class Kind { Point, Interval };

using Payload = std::variant<Matrix, IntervalMatrix>;

struct Problem {
    SemiringTag semiring = SemiringTag::MaxPlus;
    Kind kind = Kind::Point;
    Payload a;
    Payload b;
    std::optional<Payload> x0;
    std::optional<Payload> x;
    std::optional<Payload> y;
    std::optional<std::size_t> max_iter;
    bool trace = false;
};

enum ExitCode : int { Success = 0, ParseFailure = 2, DimensionFailure = 3, OverflowFailure = 4 };

json scalar_to_json(Scalar s);
Scalar scalar_from_json(const json& j);

json interval_to_json(const Interval& x);
/// [lower, upper] or a bare scalar (degenerate interval).
Interval interval_from_json(SemiringTag tag, const json& j);

/// Matrices are arrays of rows.
json matrix_to_json(const Payload& m);
Payload matrix_from_json(SemiringTag tag, Kind kind, const json& j);

/// Vectors are flat arrays of entries, read as n×1 matrices.
json vector_to_json(const Payload& v);
Payload vector_from_json(SemiringTag tag, Kind kind, const json& j);

/// `semiring_override` replaces the file's "semiring" field when set.
Problem parse_problem(const json& doc, std::optional<SemiringTag> semiring_override = std::nullopt);
json serialize_problem(const Problem& p);

/// X = A∖B plus whether A⊗X = B.
json run_residuate(const Problem& p);
/// Two-sided fixed-point solve; status, x, y (when converged), iteration count, optional trace.
json run_solve(const Problem& p);
/// Evaluates A⊗x and B⊗y and whether they agree.
json run_check(const Problem& p);

/// Exit code for an exception escaping one of the run_* commands.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace semires::cli

#endif  // SEMIRES_CLI_HPP
