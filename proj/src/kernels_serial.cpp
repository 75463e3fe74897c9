#include "semires/kernels.hpp"

namespace semires::kernels::serial {

void product(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
             std::span<Scalar> out)
{
    for (std::size_t i = 0; i < sa.rows; ++i) {
        for (std::size_t j = 0; j < sb.cols; ++j) {
            Scalar acc = zero(tag);
            for (std::size_t k = 0; k < sa.cols; ++k) {
                acc = add(tag, acc, mul(tag, a[i * sa.cols + k], b[k * sb.cols + j]));
            }
            out[i * sb.cols + j] = acc;
        }
    }
}

void left_residual(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
                   std::span<Scalar> out)
{
    for (std::size_t i = 0; i < sa.cols; ++i) {
        for (std::size_t j = 0; j < sb.cols; ++j) {
            Scalar acc = top(tag);
            for (std::size_t k = 0; k < sa.rows; ++k) {
                acc = meet(tag, acc, semires::left_residual(tag, a[k * sa.cols + i], b[k * sb.cols + j]));
            }
            out[i * sb.cols + j] = acc;
        }
    }
}

void right_residual(SemiringTag tag, std::span<const Scalar> b, Shape sb, std::span<const Scalar> c, Shape sc,
                    std::span<Scalar> out)
{
    for (std::size_t i = 0; i < sb.rows; ++i) {
        for (std::size_t j = 0; j < sc.rows; ++j) {
            Scalar acc = top(tag);
            for (std::size_t k = 0; k < sb.cols; ++k) {
                acc = meet(tag, acc, semires::right_residual(tag, b[i * sb.cols + k], c[j * sc.cols + k]));
            }
            out[i * sc.rows + j] = acc;
        }
    }
}

}  // namespace semires::kernels::serial
