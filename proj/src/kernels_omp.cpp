#include "semires/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace semires::kernels::parallel {

namespace {

// First overflow message raised by any thread; rethrown once the region is done.
class OverflowSink {
public:
    void record(const OverflowError& e) noexcept
    {
        bool expected = false;
        if (raised_.compare_exchange_strong(expected, true)) {
            message_ = e.what();
        }
    }
    void rethrow() const
    {
        if (raised_.load()) {
            throw OverflowError(message_);
        }
    }

private:
    std::atomic<bool> raised_{false};
    std::string message_;
};

long as_long(std::size_t n) { return static_cast<long>(n); }

}  // namespace

void product(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
             std::span<Scalar> out)
{
    const Scalar bottom = zero(tag);
    std::fill(out.begin(), out.end(), bottom);
    OverflowSink sink;

#pragma omp parallel for schedule(static) if (out.size() >= parallel_threshold)
    for (long i = 0; i < as_long(sa.rows); ++i) {
        try {
            Scalar* row = out.data() + static_cast<std::size_t>(i) * sb.cols;
            for (std::size_t k = 0; k < sa.cols; ++k) {
                const Scalar a_ik = a[static_cast<std::size_t>(i) * sa.cols + k];
                if (a_ik == bottom) {
                    continue;
                }
                const Scalar* b_row = b.data() + k * sb.cols;
                for (std::size_t j = 0; j < sb.cols; ++j) {
                    row[j] = std::max(row[j], mul(tag, a_ik, b_row[j]));
                }
            }
        } catch (const OverflowError& e) {
            sink.record(e);
        }
    }
    sink.rethrow();
}

void left_residual(SemiringTag tag, std::span<const Scalar> a, Shape sa, std::span<const Scalar> b, Shape sb,
                   std::span<Scalar> out)
{
    std::fill(out.begin(), out.end(), top(tag));
    OverflowSink sink;

#pragma omp parallel for schedule(static) if (out.size() >= parallel_threshold)
    for (long i = 0; i < as_long(sa.cols); ++i) {
        try {
            Scalar* row = out.data() + static_cast<std::size_t>(i) * sb.cols;
            for (std::size_t k = 0; k < sa.rows; ++k) {
                const Scalar a_ki = a[k * sa.cols + static_cast<std::size_t>(i)];
                const Scalar* b_row = b.data() + k * sb.cols;
                for (std::size_t j = 0; j < sb.cols; ++j) {
                    row[j] = std::min(row[j], semires::left_residual(tag, a_ki, b_row[j]));
                }
            }
        } catch (const OverflowError& e) {
            sink.record(e);
        }
    }
    sink.rethrow();
}

void right_residual(SemiringTag tag, std::span<const Scalar> b, Shape sb, std::span<const Scalar> c, Shape sc,
                    std::span<Scalar> out)
{
    OverflowSink sink;

#pragma omp parallel for collapse(2) schedule(static) if (out.size() >= parallel_threshold)
    for (long i = 0; i < as_long(sb.rows); ++i) {
        for (long j = 0; j < as_long(sc.rows); ++j) {
            try {
                const Scalar* b_row = b.data() + static_cast<std::size_t>(i) * sb.cols;
                const Scalar* c_row = c.data() + static_cast<std::size_t>(j) * sc.cols;
                Scalar acc = top(tag);
                for (std::size_t k = 0; k < sb.cols; ++k) {
                    acc = std::min(acc, semires::right_residual(tag, b_row[k], c_row[k]));
                }
                out[static_cast<std::size_t>(i) * sc.rows + static_cast<std::size_t>(j)] = acc;
            } catch (const OverflowError& e) {
                sink.record(e);
            }
        }
    }
    sink.rethrow();
}

}  // namespace semires::kernels::parallel
