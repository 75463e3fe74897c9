#ifndef SEMIRES_TESTS_SUPPORT_HPP
#define SEMIRES_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "semires/interval.hpp"
#include "semires/matrix.hpp"

namespace semires::test {

inline constexpr SemiringTag MP = SemiringTag::MaxPlus;
inline constexpr SemiringTag MM = SemiringTag::MaxMin;
inline constexpr SemiringTag both_tags[] = {MP, MM};

inline const Scalar NEG = Scalar::neg_inf();
inline const Scalar POS = Scalar::pos_inf();

inline Scalar S(Scalar::value_type v) { return Scalar::finite(v); }

inline Matrix mat(SemiringTag tag, std::initializer_list<std::initializer_list<Scalar>> rows)
{
    std::vector<Scalar> entries;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        cols = r.size();
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(tag, rows.size(), cols, std::move(entries));
}

inline Matrix col(SemiringTag tag, std::initializer_list<Scalar> entries)
{
    return Matrix::column(tag, std::vector<Scalar>(entries));
}

inline Interval iv(SemiringTag tag, Scalar lo, Scalar hi) { return Interval(tag, lo, hi); }

inline IntervalMatrix ivmat(SemiringTag tag, std::initializer_list<std::initializer_list<std::pair<Scalar, Scalar>>> rows)
{
    std::vector<Interval> entries;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        cols = r.size();
        for (const auto& [lo, hi] : r) {
            entries.emplace_back(tag, lo, hi);
        }
    }
    return IntervalMatrix(tag, rows.size(), cols, std::move(entries));
}

inline IntervalMatrix ivcol(SemiringTag tag, std::initializer_list<std::pair<Scalar, Scalar>> entries)
{
    std::vector<Interval> out;
    for (const auto& [lo, hi] : entries) {
        out.emplace_back(tag, lo, hi);
    }
    return IntervalMatrix::column(tag, std::move(out));
}

/// Uniform draws from {ε} ∪ [lo, hi] ∪ {⊤}, infinities with the given weight each.
class ScalarSampler {
public:
    ScalarSampler(Scalar::value_type lo, Scalar::value_type hi, double inf_weight = 0.1)
        : finite_(lo, hi), coin_(0.0, 1.0), inf_weight_(inf_weight)
    {
    }

    template <typename Rng>
    Scalar operator()(Rng& rng)
    {
        const double u = coin_(rng);
        if (u < inf_weight_) {
            return Scalar::neg_inf();
        }
        if (u < 2 * inf_weight_) {
            return Scalar::pos_inf();
        }
        return Scalar::finite(finite_(rng));
    }

    template <typename Rng>
    Interval interval(SemiringTag tag, Rng& rng)
    {
        Scalar a = (*this)(rng);
        Scalar b = (*this)(rng);
        if (b < a) {
            std::swap(a, b);
        }
        return Interval(tag, a, b);
    }

    template <typename Rng>
    Matrix matrix(SemiringTag tag, std::size_t rows, std::size_t cols, Rng& rng)
    {
        std::vector<Scalar> entries(rows * cols);
        for (auto& e : entries) {
            e = (*this)(rng);
        }
        return Matrix(tag, rows, cols, std::move(entries));
    }

    template <typename Rng>
    IntervalMatrix interval_matrix(SemiringTag tag, std::size_t rows, std::size_t cols, Rng& rng)
    {
        std::vector<Interval> entries;
        for (std::size_t k = 0; k < rows * cols; ++k) {
            entries.push_back(interval(tag, rng));
        }
        return IntervalMatrix(tag, rows, cols, std::move(entries));
    }

private:
    std::uniform_int_distribution<Scalar::value_type> finite_;
    std::uniform_real_distribution<double> coin_;
    double inf_weight_;
};

struct System {
    Matrix a;
    Matrix b;
    Matrix x0;
};

/**
 * Random finite max-plus system A (n×p), B (n×q) with a planted solution:
 * after drawing A, x*, B and y* = B∖(A⊗x*), each row where B⊗y* falls short
 * of A⊗x* gets one entry of B raised so the row is met exactly.
 */
template <typename Rng>
System planted_system(Rng& rng, std::size_t n, std::size_t p, std::size_t q, Scalar::value_type spread = 9)
{
    ScalarSampler sample(-spread, spread, 0.0);
    const Matrix a = sample.matrix(MP, n, p, rng);
    Matrix b = sample.matrix(MP, n, q, rng);
    const Matrix target = mul(a, sample.matrix(MP, p, 1, rng));
    const Matrix y = left_residual(b, target);
    const Matrix reached = mul(b, y);
    std::uniform_int_distribution<std::size_t> pick(0, q - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (reached(i, 0) != target(i, 0)) {
            const std::size_t j = pick(rng);
            b(i, j) = Scalar::finite(target(i, 0).value() - y(j, 0).value());
        }
    }
    return {a, b, sample.matrix(MP, p, 1, rng)};
}

/// The 2×2 / 2×3 interval matrices of the worked two-sided example.
inline IntervalMatrix worked_a(SemiringTag tag)
{
    return ivmat(tag, {{{S(2), S(3)}, {S(5), S(9)}}, {{S(7), S(8)}, {S(3), S(6)}}});
}

inline IntervalMatrix worked_b(SemiringTag tag)
{
    return ivmat(tag, {{{S(1), S(9)}, {S(2), S(5)}, {S(3), S(4)}}, {{S(1), S(13)}, {S(3), S(10)}, {S(9), S(10)}}});
}

inline IntervalMatrix worked_x0(SemiringTag tag) { return ivcol(tag, {{S(4), S(7)}, {S(3), S(5)}}); }

}  // namespace semires::test

#endif  // SEMIRES_TESTS_SUPPORT_HPP
