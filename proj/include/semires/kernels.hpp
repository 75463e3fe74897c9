#ifndef SEMIRES_KERNELS_HPP
#define SEMIRES_KERNELS_HPP

#include <cstddef>
#include <span>

#include "semires/scalar.hpp"

// Raw dense kernels behind the Matrix operations.
//
// All buffers are row-major. `serial` is the reference implementation; the
// `parallel` variants distribute output rows over OpenMP threads and must
// produce bit-identical results. Overflow inside a parallel region is
// collected and rethrown as OverflowError after the region ends.

namespace semires::kernels {

struct Shape {
    std::size_t rows;
    std::size_t cols;
};

namespace serial {

// out (n×m) = a (n×k) ⊗ b (k×m)
void product(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
             std::span<Scalar> out);

// out (p×m) = a (n×p) ∖ b (n×m)
void left_residual(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
                   std::span<Scalar> out);

// out (n×p) = b (n×m) ⌿ c (p×m)
void right_residual(SemiringTag tag, std::span<const Scalar> b, Shape sb, std::span<const Scalar> c, Shape sc,
                    std::span<Scalar> out);

}  // namespace serial

namespace parallel {

void product(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
             std::span<Scalar> out);

void left_residual(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
                   std::span<Scalar> out);

void right_residual(SemiringTag tag, std::span<const Scalar> b, Shape sb, std::span<const Scalar> c, Shape sc,
                    std::span<Scalar> out);

}  // namespace parallel

/// Output size below which the parallel kernels stay on the calling thread.
inline constexpr std::size_t parallel_threshold = 4096;

}  // namespace semires::kernels

#endif  // SEMIRES_KERNELS_HPP
