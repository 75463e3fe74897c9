#include "semires/solver.hpp"

#include <string>

namespace semires {

namespace {

template <SystemMatrix M>
void require_system_shape(const M& a, const M& b, const M& x)
{
    require_same_tag(a.tag(), b.tag());
    require_same_tag(a.tag(), x.tag());
    if (a.rows() != b.rows()) {
        throw DimensionError("two-sided system: A has " + std::to_string(a.rows()) + " rows, B has " +
                             std::to_string(b.rows()));
    }
    if (x.rows() != a.cols() || x.cols() != 1) {
        throw DimensionError("two-sided system: x must be a " + std::to_string(a.cols()) + "x1 vector");
    }
}

}  // namespace

template <SystemMatrix M>
M pi_step(const M& a, const M& b, const M& x)
{
    require_system_shape(a, b, x);
    const M ax = mul(a, x);
    return left_residual(a, mul(b, left_residual(b, ax)));
}

template <>
Matrix default_start(const Matrix& a)
{
    return Matrix::filled(a.tag(), a.cols(), 1, one(a.tag()));
}

template <>
IntervalMatrix default_start(const IntervalMatrix& a)
{
    return IntervalMatrix::filled(a.tag(), a.cols(), 1, Interval::degenerate(a.tag(), one(a.tag())));
}

template <SystemMatrix M>
SolveOutcome<M> solve_two_sided(const M& a, const M& b, const M& x0, const SolveOptions& options)
{
    require_system_shape(a, b, x0);
    if (options.max_iter == 0) {
        throw DomainError("solve_two_sided: max_iter must be at least 1");
    }

    SolveOutcome<M> outcome{SolveStatus::HitIterationLimit, x0, std::nullopt, 0, {}};
    if (options.keep_trace) {
        outcome.trace.push_back(x0);
    }
    while (outcome.iterations < options.max_iter) {
        M next = pi_step(a, b, outcome.x);
        ++outcome.iterations;
        if (options.keep_trace) {
            outcome.trace.push_back(next);
        }
        const bool fixed = next == outcome.x;
        outcome.x = std::move(next);
        if (is_zero(outcome.x)) {
            outcome.status = SolveStatus::DegenerateBottom;
            return outcome;
        }
        if (fixed) {
            outcome.status = SolveStatus::Converged;
            outcome.y = left_residual(b, mul(a, outcome.x));
            return outcome;
        }
    }
    return outcome;
}

template <SystemMatrix M>
bool verify_two_sided(const M& a, const M& b, const M& x, const M& y)
{
    return mul(a, x) == mul(b, y);
}

const char* to_string(SolveStatus status) noexcept
{
    switch (status) {
    case SolveStatus::Converged:
        return "converged";
    case SolveStatus::HitIterationLimit:
        return "hit_iteration_limit";
    case SolveStatus::DegenerateBottom:
        return "degenerate_bottom";
    }
    return "unknown";
}

template Matrix pi_step(const Matrix&, const Matrix&, const Matrix&);
template IntervalMatrix pi_step(const IntervalMatrix&, const IntervalMatrix&, const IntervalMatrix&);
template SolveOutcome<Matrix> solve_two_sided(const Matrix&, const Matrix&, const Matrix&, const SolveOptions&);
template SolveOutcome<IntervalMatrix> solve_two_sided(const IntervalMatrix&, const IntervalMatrix&,
                                                      const IntervalMatrix&, const SolveOptions&);
template bool verify_two_sided(const Matrix&, const Matrix&, const Matrix&, const Matrix&);
template bool verify_two_sided(const IntervalMatrix&, const IntervalMatrix&, const IntervalMatrix&,
                               const IntervalMatrix&);

}  // namespace semires
