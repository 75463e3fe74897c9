#include "semires/oracle.hpp"

#include <algorithm>
#include <string>

#include "semires/solver.hpp"

namespace semires::oracle {

namespace {

void check_budget(std::size_t choices, std::size_t length)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (choices != 0 && total > enumeration_budget / choices) {
            throw BudgetExceeded("oracle: " + std::to_string(choices) + "^" + std::to_string(length) +
                                 " candidates exceed the enumeration budget");
        }
        total *= choices;
    }
}

// Odometer over per-coordinate candidate lists; calls visit(indices) in
// lexicographic order. Coordinate 0 is the most significant.
template <typename Visit>
void enumerate(const std::vector<std::size_t>& radix, Visit visit)
{
    if (std::any_of(radix.begin(), radix.end(), [](std::size_t r) { return r == 0; })) {
        return;
    }
    std::vector<std::size_t> idx(radix.size(), 0);
    while (true) {
        visit(idx);
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < radix[pos]) {
                break;
            }
            idx[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
        if (idx.empty()) {
            return;
        }
    }
}

// A(:, :) ⊗ x ⪯ b(:, col), evaluated with scalar operations only.
bool feasible(const Matrix& a, const std::vector<Scalar>& x, const Matrix& b, std::size_t col)
{
    const auto tag = a.tag();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar acc = zero(tag);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            acc = add(tag, acc, mul(tag, a(i, k), x[k]));
        }
        if (!leq(tag, acc, b(i, col))) {
            return false;
        }
    }
    return true;
}

bool feasible(const IntervalMatrix& a, const std::vector<Interval>& x, const IntervalMatrix& b, std::size_t col)
{
    const auto tag = a.tag();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Interval acc = Interval::degenerate(tag, zero(tag));
        for (std::size_t k = 0; k < a.cols(); ++k) {
            acc = add(acc, mul(a(i, k), x[k]));
        }
        if (!leq(acc, b(i, col))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Grid::Grid(std::vector<Scalar> values) : values_(std::move(values))
{
    values_.push_back(Scalar::neg_inf());
    values_.push_back(Scalar::pos_inf());
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Grid Grid::range(Scalar::value_type lo, Scalar::value_type hi)
{
    std::vector<Scalar> v;
    for (auto k = lo; k <= hi; ++k) {
        v.push_back(Scalar::finite(k));
    }
    return Grid(std::move(v));
}

bool Grid::contains(Scalar s) const noexcept
{
    return std::binary_search(values_.begin(), values_.end(), s);
}

std::vector<Interval> Grid::intervals(SemiringTag tag) const
{
    std::vector<Interval> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        for (std::size_t j = i; j < values_.size(); ++j) {
            out.emplace_back(tag, values_[i], values_[j]);
        }
    }
    return out;
}

Scalar brute_greatest_scalar(SemiringTag tag, Scalar a, Scalar b, const Grid& grid)
{
    Scalar best = Scalar::neg_inf();
    for (Scalar x : grid.values()) {
        if (leq(tag, mul(tag, a, x), b)) {
            best = std::max(best, x);
        }
    }
    return best;
}

Interval brute_greatest_interval(const Interval& a, const Interval& b, const Grid& grid)
{
    require_same_tag(a.tag(), b.tag());
    const auto tag = a.tag();
    Scalar lo = Scalar::neg_inf();
    Scalar hi = Scalar::neg_inf();
    for (const Interval& x : grid.intervals(tag)) {
        if (leq(mul(a, x), b)) {
            lo = std::max(lo, x.lower());
            hi = std::max(hi, x.upper());
        }
    }
    return Interval(tag, lo, hi);
}

Matrix brute_greatest_vector(const Matrix& a, const Matrix& b, const Grid& grid)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows()) {
        throw DimensionError("brute_greatest_vector: row counts differ");
    }
    const std::size_t p = a.cols();
    check_budget(grid.size(), p);

    Matrix best = Matrix::filled(a.tag(), p, b.cols(), Scalar::neg_inf());
    const auto& values = grid.values();
    std::vector<Scalar> x(p);
    for (std::size_t col = 0; col < b.cols(); ++col) {
        enumerate(std::vector<std::size_t>(p, values.size()), [&](const std::vector<std::size_t>& idx) {
            for (std::size_t k = 0; k < p; ++k) {
                x[k] = values[idx[k]];
            }
            if (feasible(a, x, b, col)) {
                for (std::size_t k = 0; k < p; ++k) {
                    best(k, col) = std::max(best(k, col), x[k]);
                }
            }
        });
    }
    return best;
}

IntervalMatrix brute_greatest_vector(const IntervalMatrix& a, const IntervalMatrix& b, const Grid& grid)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows()) {
        throw DimensionError("brute_greatest_vector: row counts differ");
    }
    const auto tag = a.tag();
    const std::size_t p = a.cols();
    const auto candidates = grid.intervals(tag);
    check_budget(candidates.size(), p);

    Matrix lo = Matrix::filled(tag, p, b.cols(), Scalar::neg_inf());
    Matrix hi = lo;
    std::vector<Interval> x(p, candidates.front());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        enumerate(std::vector<std::size_t>(p, candidates.size()), [&](const std::vector<std::size_t>& idx) {
            for (std::size_t k = 0; k < p; ++k) {
                x[k] = candidates[idx[k]];
            }
            if (feasible(a, x, b, col)) {
                for (std::size_t k = 0; k < p; ++k) {
                    lo(k, col) = std::max(lo(k, col), x[k].lower());
                    hi(k, col) = std::max(hi(k, col), x[k].upper());
                }
            }
        });
    }
    return IntervalMatrix::from_bounds(lo, hi);
}

std::vector<Matrix> brute_fixed_points(const Matrix& a, const Matrix& b, const Grid& grid, const Matrix& x_cap)
{
    const auto tag = a.tag();
    const std::size_t p = a.cols();
    if (x_cap.rows() != p || x_cap.cols() != 1) {
        throw DimensionError("brute_fixed_points: x_cap must be a " + std::to_string(p) + "x1 vector");
    }
    std::vector<std::vector<Scalar>> choices(p);
    std::vector<std::size_t> radix(p);
    for (std::size_t k = 0; k < p; ++k) {
        for (Scalar v : grid.values()) {
            if (leq(tag, v, x_cap(k, 0))) {
                choices[k].push_back(v);
            }
        }
        radix[k] = choices[k].size();
    }
    check_budget(grid.size(), p);

    std::vector<Matrix> found;
    enumerate(radix, [&](const std::vector<std::size_t>& idx) {
        std::vector<Scalar> x(p);
        for (std::size_t k = 0; k < p; ++k) {
            x[k] = choices[k][idx[k]];
        }
        Matrix candidate = Matrix::column(tag, std::move(x));
        if (!is_zero(candidate) && pi_step(a, b, candidate) == candidate) {
            found.push_back(std::move(candidate));
        }
    });
    return found;
}

std::vector<IntervalMatrix> brute_fixed_points(const IntervalMatrix& a, const IntervalMatrix& b, const Grid& grid,
                                               const IntervalMatrix& x_cap)
{
    const auto tag = a.tag();
    const std::size_t p = a.cols();
    if (x_cap.rows() != p || x_cap.cols() != 1) {
        throw DimensionError("brute_fixed_points: x_cap must be a " + std::to_string(p) + "x1 vector");
    }
    const auto all = grid.intervals(tag);
    std::vector<std::vector<Interval>> choices(p);
    std::vector<std::size_t> radix(p);
    for (std::size_t k = 0; k < p; ++k) {
        for (const Interval& v : all) {
            if (leq(v, x_cap(k, 0))) {
                choices[k].push_back(v);
            }
        }
        radix[k] = choices[k].size();
    }
    check_budget(all.size(), p);

    std::vector<IntervalMatrix> found;
    enumerate(radix, [&](const std::vector<std::size_t>& idx) {
        std::vector<Interval> x;
        x.reserve(p);
        for (std::size_t k = 0; k < p; ++k) {
            x.push_back(choices[k][idx[k]]);
        }
        IntervalMatrix candidate = IntervalMatrix::column(tag, std::move(x));
        if (!is_zero(candidate) && pi_step(a, b, candidate) == candidate) {
            found.push_back(std::move(candidate));
        }
    });
    return found;
}

}  // namespace semires::oracle
