#ifndef SEMIRES_ORACLE_HPP
#define SEMIRES_ORACLE_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "semires/interval.hpp"
#include "semires/matrix.hpp"

// Exhaustive reference searches over small finite grids. Test-only: these
// certify the residual formulas and the fixed-point iteration by plain
// enumeration and share no code path with the analytic kernels beyond the
// scalar ⊕/⊗ being inverted.

namespace semires::oracle {

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Candidate vectors enumerated per search before BudgetExceeded is thrown.
inline constexpr std::size_t enumeration_budget = 1'000'000;

/// Strictly ascending sample of Scalars; always contains ε and ⊤.
class Grid {
public:
    /// Sorts, deduplicates and adds ε and ⊤ if missing.
    explicit Grid(std::vector<Scalar> values);
    Grid(std::initializer_list<Scalar> values) : Grid(std::vector<Scalar>(values)) {}

    /// {ε} ∪ {lo..hi} ∪ {⊤}
    static Grid range(Scalar::value_type lo, Scalar::value_type hi);
    /// {ε} ∪ {-10..10} ∪ {⊤}
    static Grid standard() { return range(-10, 10); }

    const std::vector<Scalar>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(Scalar s) const noexcept;

    /// Every interval [lo, hi] with lo ⪯ hi drawn from the grid.
    std::vector<Interval> intervals(SemiringTag tag) const;

private:
    std::vector<Scalar> values_;
};

/// Largest grid x with a ⊗ x ⪯ b.
Scalar brute_greatest_scalar(SemiringTag tag, Scalar a, Scalar b, const Grid& grid);

/// Largest grid interval x with a ⊗ x ⪯ b (boundwise order).
Interval brute_greatest_interval(const Interval& a, const Interval& b, const Grid& grid);

/// Entrywise maximum over all grid X (A.cols × B.cols) with A ⊗ X ⪯ B, searched column by column.
Matrix brute_greatest_vector(const Matrix& a, const Matrix& b, const Grid& grid);

/// Interval analogue of brute_greatest_vector.
IntervalMatrix brute_greatest_vector(const IntervalMatrix& a, const IntervalMatrix& b, const Grid& grid);

/// All grid vectors x ⪯ x_cap, x ≠ ε, with Π(x) = x, in ascending lexicographic order.
std::vector<Matrix> brute_fixed_points(const Matrix& a, const Matrix& b, const Grid& grid, const Matrix& x_cap);

std::vector<IntervalMatrix> brute_fixed_points(const IntervalMatrix& a, const IntervalMatrix& b, const Grid& grid,
                                               const IntervalMatrix& x_cap);

}  // namespace semires::oracle

#endif  // SEMIRES_ORACLE_HPP
