#include "semires/matrix.hpp"

#include <algorithm>
#include <string>

#include "semires/kernels.hpp"

namespace semires {

namespace {

std::string shape_str(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape " + shape_str(a) + " vs " + shape_str(b));
    }
}

template <typename F>
Matrix entrywise(const Matrix& a, const Matrix& b, const char* op, F f)
{
    require_same_shape(a, b, op);
    std::vector<Scalar> out(a.entries().size());
    std::transform(a.entries().begin(), a.entries().end(), b.entries().begin(), out.begin(), f);
    return Matrix(a.tag(), a.rows(), a.cols(), std::move(out));
}

}  // namespace

Matrix::Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : tag_(tag), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("Matrix: dimensions must be positive");
    }
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("Matrix: " + std::to_string(data_.size()) + " entries for shape " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Matrix Matrix::filled(SemiringTag tag, std::size_t rows, std::size_t cols, Scalar value)
{
    return Matrix(tag, rows, cols, std::vector<Scalar>(rows * cols, value));
}

Matrix Matrix::identity(SemiringTag tag, std::size_t n)
{
    Matrix m = filled(tag, n, n, zero(tag));
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = one(tag);
    }
    return m;
}

Matrix Matrix::column(SemiringTag tag, std::vector<Scalar> entries)
{
    const std::size_t n = entries.size();
    return Matrix(tag, n, 1, std::move(entries));
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("Matrix::at: index out of range");
    }
    return (*this)(i, j);
}

Matrix Matrix::transposed() const
{
    std::vector<Scalar> out(data_.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[j * rows_ + i] = (*this)(i, j);
        }
    }
    return Matrix(tag_, cols_, rows_, std::move(out));
}

Matrix add(const Matrix& a, const Matrix& b)
{
    const auto tag = a.tag();
    return entrywise(a, b, "add", [tag](Scalar x, Scalar y) { return add(tag, x, y); });
}

Matrix meet(const Matrix& a, const Matrix& b)
{
    const auto tag = a.tag();
    return entrywise(a, b, "meet", [tag](Scalar x, Scalar y) { return meet(tag, x, y); });
}

bool leq(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "leq");
    const auto tag = a.tag();
    return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(),
                      [tag](Scalar x, Scalar y) { return leq(tag, x, y); });
}

Matrix mul(const Matrix& a, const Matrix& b)
{
    require_same_tag(a.tag(), b.tag());
    if (a.cols() != b.rows()) {
        throw DimensionError("mul: " + shape_str(a) + " times " + shape_str(b));
    }
    std::vector<Scalar> out(a.rows() * b.cols());
    kernels::parallel::product(a.tag(), a.entries(), {a.rows(), a.cols()}, b.entries(), {b.rows(), b.cols()}, out);
    return Matrix(a.tag(), a.rows(), b.cols(), std::move(out));
}

Matrix left_residual(const Matrix& a, const Matrix& b)
{
    require_same_tag(a.tag(), b.tag());
    if (a.rows() != b.rows()) {
        throw DimensionError("left_residual: " + shape_str(a) + " under " + shape_str(b));
    }
    std::vector<Scalar> out(a.cols() * b.cols());
    kernels::parallel::left_residual(a.tag(), a.entries(), {a.rows(), a.cols()}, b.entries(), {b.rows(), b.cols()},
                                     out);
    return Matrix(a.tag(), a.cols(), b.cols(), std::move(out));
}

Matrix right_residual(const Matrix& b, const Matrix& c)
{
    require_same_tag(b.tag(), c.tag());
    if (b.cols() != c.cols()) {
        throw DimensionError("right_residual: " + shape_str(b) + " over " + shape_str(c));
    }
    std::vector<Scalar> out(b.rows() * c.rows());
    kernels::parallel::right_residual(b.tag(), b.entries(), {b.rows(), b.cols()}, c.entries(), {c.rows(), c.cols()},
                                      out);
    return Matrix(b.tag(), b.rows(), c.rows(), std::move(out));
}

bool is_equality_solvable(const Matrix& a, const Matrix& b)
{
    return mul(a, left_residual(a, b)) == b;
}

bool is_zero(const Matrix& m) noexcept
{
    return std::all_of(m.entries().begin(), m.entries().end(), [](Scalar s) { return s.is_neg_inf(); });
}

}  // namespace semires
