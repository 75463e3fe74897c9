#include "semires/interval.hpp"

#include <algorithm>
#include <string>

namespace semires {

namespace {

std::string shape_str(const IntervalMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const IntervalMatrix& a, const IntervalMatrix& b, const char* op)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape " + shape_str(a) + " vs " + shape_str(b));
    }
}

}  // namespace

Interval::Interval(SemiringTag tag, Scalar lower, Scalar upper) : tag_(tag), lower_(lower), upper_(upper)
{
    if (!semires::leq(tag, lower, upper)) {
        throw DomainError("Interval: lower bound " + to_string(lower) + " exceeds upper bound " + to_string(upper));
    }
}

Interval project(const ScalarPair& p) noexcept
{
    // meet(first, second) ⪯ second always holds, so the constructor cannot throw.
    return Interval(p.tag, meet(p.tag, p.first, p.second), p.second);
}

Interval add(const Interval& x, const Interval& y)
{
    require_same_tag(x.tag(), y.tag());
    const auto tag = x.tag();
    return Interval(tag, add(tag, x.lower(), y.lower()), add(tag, x.upper(), y.upper()));
}

Interval mul(const Interval& x, const Interval& y)
{
    require_same_tag(x.tag(), y.tag());
    const auto tag = x.tag();
    return Interval(tag, mul(tag, x.lower(), y.lower()), mul(tag, x.upper(), y.upper()));
}

bool leq(const Interval& x, const Interval& y)
{
    require_same_tag(x.tag(), y.tag());
    return leq(x.tag(), x.lower(), y.lower()) && leq(x.tag(), x.upper(), y.upper());
}

Interval left_residual(const Interval& a, const Interval& b)
{
    require_same_tag(a.tag(), b.tag());
    const auto tag = a.tag();
    return project({tag, left_residual(tag, a.lower(), b.lower()), left_residual(tag, a.upper(), b.upper())});
}

Interval right_residual(const Interval& b, const Interval& a)
{
    require_same_tag(a.tag(), b.tag());
    const auto tag = a.tag();
    return project({tag, right_residual(tag, b.lower(), a.lower()), right_residual(tag, b.upper(), a.upper())});
}

bool contains(const Interval& x, Scalar t) noexcept
{
    return leq(x.tag(), x.lower(), t) && leq(x.tag(), t, x.upper());
}

bool subset(const Interval& x, const Interval& y)
{
    require_same_tag(x.tag(), y.tag());
    const auto tag = x.tag();
    return leq(tag, y.lower(), x.lower()) && leq(tag, x.upper(), y.upper());
}

IntervalMatrix::IntervalMatrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Interval> entries)
    : tag_(tag), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("IntervalMatrix: dimensions must be positive");
    }
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("IntervalMatrix: " + std::to_string(data_.size()) + " entries for shape " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (const auto& x : data_) {
        require_same_tag(tag_, x.tag());
    }
}

IntervalMatrix IntervalMatrix::from_bounds(const Matrix& lower, const Matrix& upper)
{
    require_same_tag(lower.tag(), upper.tag());
    if (lower.rows() != upper.rows() || lower.cols() != upper.cols()) {
        throw DimensionError("IntervalMatrix::from_bounds: bound shapes differ");
    }
    std::vector<Interval> out;
    out.reserve(lower.entries().size());
    for (std::size_t k = 0; k < lower.entries().size(); ++k) {
        out.emplace_back(lower.tag(), lower.entries()[k], upper.entries()[k]);
    }
    return IntervalMatrix(lower.tag(), lower.rows(), lower.cols(), std::move(out));
}

IntervalMatrix IntervalMatrix::degenerate(const Matrix& m)
{
    return from_bounds(m, m);
}

IntervalMatrix IntervalMatrix::filled(SemiringTag tag, std::size_t rows, std::size_t cols, Interval value)
{
    return IntervalMatrix(tag, rows, cols, std::vector<Interval>(rows * cols, value));
}

IntervalMatrix IntervalMatrix::identity(SemiringTag tag, std::size_t n)
{
    return degenerate(Matrix::identity(tag, n));
}

IntervalMatrix IntervalMatrix::column(SemiringTag tag, std::vector<Interval> entries)
{
    const std::size_t n = entries.size();
    return IntervalMatrix(tag, n, 1, std::move(entries));
}

const Interval& IntervalMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("IntervalMatrix::at: index out of range");
    }
    return (*this)(i, j);
}

Matrix IntervalMatrix::lower() const
{
    std::vector<Scalar> out(data_.size());
    std::transform(data_.begin(), data_.end(), out.begin(), [](const Interval& x) { return x.lower(); });
    return Matrix(tag_, rows_, cols_, std::move(out));
}

Matrix IntervalMatrix::upper() const
{
    std::vector<Scalar> out(data_.size());
    std::transform(data_.begin(), data_.end(), out.begin(), [](const Interval& x) { return x.upper(); });
    return Matrix(tag_, rows_, cols_, std::move(out));
}

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b)
{
    require_same_shape(a, b, "add");
    std::vector<Interval> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        out.push_back(add(a.entries()[k], b.entries()[k]));
    }
    return IntervalMatrix(a.tag(), a.rows(), a.cols(), std::move(out));
}

IntervalMatrix mul(const IntervalMatrix& a, const IntervalMatrix& b)
{
    require_same_tag(a.tag(), b.tag());
    if (a.cols() != b.rows()) {
        throw DimensionError("mul: " + shape_str(a) + " times " + shape_str(b));
    }
    const auto tag = a.tag();
    const Interval bottom = Interval::degenerate(tag, zero(tag));
    std::vector<Interval> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Interval acc = bottom;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc = add(acc, mul(a(i, k), b(k, j)));
            }
            out.push_back(acc);
        }
    }
    return IntervalMatrix(tag, a.rows(), b.cols(), std::move(out));
}

bool leq(const IntervalMatrix& a, const IntervalMatrix& b)
{
    require_same_shape(a, b, "leq");
    return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(),
                      [](const Interval& x, const Interval& y) { return leq(x, y); });
}

IntervalMatrix left_residual(const IntervalMatrix& a, const IntervalMatrix& b)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows()) {
        throw DimensionError("left_residual: " + shape_str(a) + " under " + shape_str(b));
    }
    const auto tag = a.tag();
    const Matrix lo = left_residual(a.lower(), b.lower());
    const Matrix hi = left_residual(a.upper(), b.upper());
    std::vector<Interval> out;
    out.reserve(lo.entries().size());
    for (std::size_t k = 0; k < lo.entries().size(); ++k) {
        out.push_back(project({tag, lo.entries()[k], hi.entries()[k]}));
    }
    return IntervalMatrix(tag, lo.rows(), lo.cols(), std::move(out));
}

bool is_equality_solvable(const IntervalMatrix& a, const IntervalMatrix& b)
{
    return mul(a, left_residual(a, b)) == b;
}

bool is_zero(const IntervalMatrix& m) noexcept
{
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](const Interval& x) { return x.upper().is_neg_inf(); });
}

}  // namespace semires
