#pragma once

#include <span>
#include <vector>

#include "mldp/instance.hpp"
#include "mldp/verify.hpp"

namespace mldp {

/// Decision-form TSP input: an m x m non-negative cost matrix with zero
/// diagonal, plus an inclusive bound on the total tour cost.
class TspDecisionInstance {
 public:
  /// Validates and adopts a flat row-major m x m matrix.
  static TspDecisionInstance of(Client cities, std::vector<Time> costs, Time budget);

  Client cities() const { return m_; }
  Time budget() const { return budget_; }

  Time cost(Client i, Client j) const {
    return c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
              static_cast<std::size_t>(j)];
  }

  std::span<const Time> raw() const { return c_; }

 private:
  TspDecisionInstance(Client m, std::vector<Time> c, Time budget)
      : m_(m), c_(std::move(c)), budget_(budget) {}

  Client m_ = 0;
  std::vector<Time> c_;
  Time budget_ = 0;
};

/// Upper bound on the latency any tour over `costs` can accumulate: take
/// the largest off-diagonal cost of each row (as if every departure chose
/// its most expensive arc), sort them descending, and sum the cumulative
/// sums of that list. O(m^2) + O(m log m).
Time worst_case_latency_bound(std::span<const Time> costs, Client cities);

Time worst_case_latency_bound(const TspDecisionInstance& tsp);

/// Transforms a decision-TSP input into a decision instance over the same
/// matrix: city 0 becomes the depot, travel times are the TSP costs (so all
/// service times are zero), theta carries the tour budget and omega is the
/// worst-case latency bound, which no tour can exceed. The transformed
/// instance therefore answers "yes" exactly when the TSP input does.
DecisionInstance reduce_tsp(const TspDecisionInstance& tsp);

}  // namespace mldp
