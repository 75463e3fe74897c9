#ifndef SEMIRES_MATRIX_HPP
#define SEMIRES_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "semires/scalar.hpp"

namespace semires {

/**
 * Dense row-major matrix of Scalars over one semiring.
 *
 * Both dimensions are positive. Vectors are n×1 matrices.
 */
class Matrix {
public:
    Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix filled(SemiringTag tag, std::size_t rows, std::size_t cols, Scalar value);
    /// e on the diagonal, ε elsewhere.
    static Matrix identity(SemiringTag tag, std::size_t n);
    static Matrix column(SemiringTag tag, std::vector<Scalar> entries);

    SemiringTag tag() const noexcept { return tag_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Scalar> entries() const noexcept { return data_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    /// Bounds-checked access.
    const Scalar& at(std::size_t i, std::size_t j) const;

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    SemiringTag tag_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix meet(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
bool leq(const Matrix& a, const Matrix& b);

/// Greatest X with A ⊗ X ⪯ B: X_ij = ∧_k A_ki ∖ B_kj.
Matrix left_residual(const Matrix& a, const Matrix& b);
/// Greatest X with X ⊗ C ⪯ B: X_ij = ∧_k B_ik ⌿ C_jk.
Matrix right_residual(const Matrix& b, const Matrix& c);

/// True iff A ⊗ (A∖b) = b, i.e. A ⊗ x = b has a solution.
bool is_equality_solvable(const Matrix& a, const Matrix& b);

/// True iff every entry is ε.
bool is_zero(const Matrix& m) noexcept;

}  // namespace semires

#endif  // SEMIRES_MATRIX_HPP
