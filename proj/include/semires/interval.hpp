#ifndef SEMIRES_INTERVAL_HPP
#define SEMIRES_INTERVAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "semires/matrix.hpp"
#include "semires/scalar.hpp"

namespace semires {

/// Closed interval [lower, upper] with lower ⪯ upper.
class Interval {
public:
    /// Throws DomainError when lower ⋠ upper.
    Interval(SemiringTag tag, Scalar lower, Scalar upper);

    static Interval degenerate(SemiringTag tag, Scalar value) { return Interval(tag, value, value); }

    SemiringTag tag() const noexcept { return tag_; }
    Scalar lower() const noexcept { return lower_; }
    Scalar upper() const noexcept { return upper_; }
    bool is_degenerate() const noexcept { return lower_ == upper_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    SemiringTag tag_;
    Scalar lower_;
    Scalar upper_;
};

/// Element of the pair semiring; may be unordered. Only feeds `project`.
struct ScalarPair {
    SemiringTag tag;
    Scalar first;
    Scalar second;
};

/// Greatest ordered pair below p: [first ∧ second, second].
Interval project(const ScalarPair& p) noexcept;

Interval add(const Interval& x, const Interval& y);
Interval mul(const Interval& x, const Interval& y);
bool leq(const Interval& x, const Interval& y);

/// Greatest interval x with a ⊗ x ⪯ b.
Interval left_residual(const Interval& a, const Interval& b);
/// Greatest interval x with x ⊗ a ⪯ b.
Interval right_residual(const Interval& b, const Interval& a);

bool contains(const Interval& x, Scalar t) noexcept;
/// x ⊂ y iff y.lower ⪯ x.lower and x.upper ⪯ y.upper.
bool subset(const Interval& x, const Interval& y);

/// Dense row-major matrix of Intervals.
class IntervalMatrix {
public:
    IntervalMatrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Interval> entries);

    /// Pairs up two point matrices; throws DomainError unless lower ⪯ upper entrywise.
    static IntervalMatrix from_bounds(const Matrix& lower, const Matrix& upper);
    static IntervalMatrix degenerate(const Matrix& m);
    static IntervalMatrix filled(SemiringTag tag, std::size_t rows, std::size_t cols, Interval value);
    static IntervalMatrix identity(SemiringTag tag, std::size_t n);
    static IntervalMatrix column(SemiringTag tag, std::vector<Interval> entries);

    SemiringTag tag() const noexcept { return tag_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Interval> entries() const noexcept { return data_; }

    const Interval& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    const Interval& at(std::size_t i, std::size_t j) const;

    Matrix lower() const;
    Matrix upper() const;

    friend bool operator==(const IntervalMatrix&, const IntervalMatrix&) = default;

private:
    SemiringTag tag_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Interval> data_;
};

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix mul(const IntervalMatrix& a, const IntervalMatrix& b);
bool leq(const IntervalMatrix& a, const IntervalMatrix& b);

/// Residuate each bound matrix, then project entrywise: [X' ∧ X'', X''].
IntervalMatrix left_residual(const IntervalMatrix& a, const IntervalMatrix& b);

bool is_equality_solvable(const IntervalMatrix& a, const IntervalMatrix& b);
bool is_zero(const IntervalMatrix& m) noexcept;

}  // namespace semires

#endif  // SEMIRES_INTERVAL_HPP
