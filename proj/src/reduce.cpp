#include "mldp/reduce.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace mldp {

TspDecisionInstance TspDecisionInstance::of(Client cities, std::vector<Time> costs,
                                            Time budget) {
  if (cities < 2)
    fail(Status::invalid_argument, "tour needs at least two cities");
  const std::size_t m = static_cast<std::size_t>(cities);
  if (costs.size() != m * m)
    fail(Status::invalid_argument,
         "cost matrix must have " + std::to_string(m * m) + " entries, got " +
             std::to_string(costs.size()));
  for (std::size_t i = 0; i < m; ++i)
    if (costs[i * m + i] != 0)
      fail(Status::invalid_argument,
           "cost matrix diagonal must be zero (city " + std::to_string(i) + ")");
  for (std::size_t k = 0; k < costs.size(); ++k)
    if (costs[k] < 0)
      fail(Status::invalid_argument,
           "cost matrix entries must be non-negative (entry " +
               std::to_string(k) + " is " + std::to_string(costs[k]) + ")");
  if (budget < 0)
    fail(Status::invalid_argument, "tour budget must be non-negative");
  return TspDecisionInstance(cities, std::move(costs), budget);
}

Time worst_case_latency_bound(std::span<const Time> costs, Client cities) {
  const std::size_t m = static_cast<std::size_t>(cities);
  if (m < 2 || costs.size() != m * m)
    fail(Status::invalid_argument,
         "latency bound needs a square matrix over at least two cities");

  // Any tour's latency is a sum of m-1 arcs with distinct source cities,
  // weighted m-1, m-2, ..., 1 in visiting order. Pairing the largest
  // per-row maxima with the largest weights dominates every such sum, and
  // summing cumulative sums of the descending maxima realizes exactly that
  // pairing.
  std::vector<Time> maxima(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Time best = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i)
        best = std::max(best, costs[i * m + j]);
    maxima[i] = best;
  }
  std::sort(maxima.begin(), maxima.end(), std::greater<>());

  const Time cap = std::numeric_limits<Time>::max();
  Time bound = 0;
  Time prefix = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (prefix > cap - maxima[i])
      fail(Status::overflow, "latency bound does not fit in 64 bits");
    prefix += maxima[i];
    if (bound > cap - prefix)
      fail(Status::overflow, "latency bound does not fit in 64 bits");
    bound += prefix;
  }
  return bound;
}

Time worst_case_latency_bound(const TspDecisionInstance& tsp) {
  return worst_case_latency_bound(tsp.raw(), tsp.cities());
}

DecisionInstance reduce_tsp(const TspDecisionInstance& tsp) {
  // The cost matrix carries over verbatim: a zero diagonal means zero
  // service times, so the travel of any route equals the cost of the
  // corresponding tour, and the latency bound is loose enough that every
  // tour satisfies it. The travel budget alone stays decisive.
  std::vector<Time> times(tsp.raw().begin(), tsp.raw().end());
  Instance inst = Instance::from_matrix(tsp.cities() - 1, std::move(times));
  return DecisionInstance::of(std::move(inst), tsp.budget(),
                              worst_case_latency_bound(tsp));
}

}  // namespace mldp
