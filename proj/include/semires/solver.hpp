#ifndef SEMIRES_SOLVER_HPP
#define SEMIRES_SOLVER_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "semires/interval.hpp"
#include "semires/matrix.hpp"

namespace semires {

template <typename M>
concept SystemMatrix = std::same_as<M, Matrix> || std::same_as<M, IntervalMatrix>;

enum class SolveStatus { Converged, HitIterationLimit, DegenerateBottom };

struct SolveOptions {
    std::size_t max_iter = 10'000;
    bool keep_trace = false;
};

template <SystemMatrix M>
struct SolveOutcome {
    SolveStatus status;
    M x;
    /// B∖(A⊗x); present only when status is Converged.
    std::optional<M> y;
    /// Number of Π applications performed.
    std::size_t iterations = 0;
    /// x0, x1, ..., x_last when SolveOptions::keep_trace is set.
    std::vector<M> trace;
};

/// One application of Π: x ↦ A∖(B⊗(B∖(A⊗x))).
template <SystemMatrix M>
M pi_step(const M& a, const M& b, const M& x);

/// all-e vector (point) or all-[e,e] vector (interval) with a.cols() rows.
template <SystemMatrix M>
M default_start(const M& a);
template <>
Matrix default_start(const Matrix& a);
template <>
IntervalMatrix default_start(const IntervalMatrix& a);

/**
 * Iterate x_{n+1} = Π(x_n) for the two-sided system A⊗x = B⊗y.
 *
 * Stops when two successive iterates coincide (Converged, with
 * y = B∖(A⊗x)), when an iterate is the all-ε vector (DegenerateBottom),
 * or after `max_iter` steps (HitIterationLimit). Partially-ε iterates keep
 * iterating.
 */
template <SystemMatrix M>
SolveOutcome<M> solve_two_sided(const M& a, const M& b, const M& x0, const SolveOptions& options = {});

template <SystemMatrix M>
SolveOutcome<M> solve_two_sided(const M& a, const M& b, const SolveOptions& options = {})
{
    return solve_two_sided(a, b, default_start(a), options);
}

/// A⊗x == B⊗y exactly.
template <SystemMatrix M>
bool verify_two_sided(const M& a, const M& b, const M& x, const M& y);

const char* to_string(SolveStatus status) noexcept;

}  // namespace semires

#endif  // SEMIRES_SOLVER_HPP
