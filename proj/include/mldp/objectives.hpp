#pragma once

#include <span>

#include "mldp/instance.hpp"

namespace mldp {

/// The two route objectives: total travel distance (the full closed tour,
/// return arc included) and total latency (sum over clients of the time
/// elapsed until the vehicle reaches them; the return arc contributes
/// nothing).
struct ObjectiveValues {
  Time travel = 0;
  Time latency = 0;

  bool operator==(const ObjectiveValues&) const = default;
};

/// Evaluates both objectives from the position-weighted arc costs:
///   travel  = c(0, r1) + sum_k c(r_k, r_{k+1}) + c(r_n, 0)
///   latency = n * c(0, r1) + sum_k (n - k) * c(r_k, r_{k+1})
ObjectiveValues evaluate(const Instance& inst, const Route& route);

/// Evaluates both objectives by walking the route with three accumulators
/// (clock, travel, latency): each arc adds its travel time and the source's
/// service time to the clock and travel, then the clock to the latency; the
/// final depot-return arc counts toward travel only. Exactly equal to
/// evaluate() on every valid input; kept as an independent computation
/// route for cross-checking.
ObjectiveValues simulate_timeline(const Instance& inst, const Route& route);

namespace detail {
// Unvalidated variants used by the solvers; callers guarantee that `order`
// is a permutation of {1..n}.
ObjectiveValues evaluate_order(const Instance& inst, std::span<const Client> order);
ObjectiveValues simulate_order(const Instance& inst, std::span<const Client> order);
}  // namespace detail

}  // namespace mldp
