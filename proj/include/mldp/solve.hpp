#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mldp/instance.hpp"
#include "mldp/objectives.hpp"
#include "mldp/verify.hpp"

namespace mldp {

enum class Method {
  brute_force = 0,
  dp = 1,
};

struct SolveOptions {
  Method method = Method::dp;
  /// Worker count for the search-space partition. Results are bit-identical
  /// for every value.
  int jobs = 1;
  /// Size limits; instances above the active method's limit are rejected.
  Client brute_force_limit = 10;
  Client dp_limit = 16;
  /// 0 keeps the DP exact. A positive cap bounds the labels stored per
  /// (subset, last) state, turning the DP into a heuristic.
  std::size_t label_cap = 0;
};

struct SolveStats {
  std::uint64_t routes_enumerated = 0;
  std::uint64_t labels_generated = 0;
  std::uint64_t labels_kept = 0;
};

struct FrontPoint {
  ObjectiveValues value;
  Route witness;
};

/// Nondominated objective pairs, each with one witness route that attains
/// it exactly. Sorted by strictly ascending travel, which for a dominance-
/// free set means strictly descending latency. Among routes attaining the
/// same pair the lexicographically smallest permutation is kept.
class ParetoFront {
 public:
  std::span<const FrontPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const FrontPoint& operator[](std::size_t i) const { return points_[i]; }

 private:
  friend class FrontBuilder;
  std::vector<FrontPoint> points_;
};

/// Exhaustive n! enumeration. Exact for any input; rejects instances above
/// the configured limit.
ParetoFront brute_force_front(const Instance& inst, const SolveOptions& opts = {},
                              SolveStats* stats = nullptr);

/// Label-setting dynamic program over (visited subset, last client) states
/// with per-state dominance pruning. Exact (equal to brute_force_front)
/// whenever label_cap is 0.
ParetoFront dp_front(const Instance& inst, const SolveOptions& opts = {},
                     SolveStats* stats = nullptr);

/// Dispatches on opts.method.
ParetoFront solve_front(const Instance& inst, const SolveOptions& opts = {},
                        SolveStats* stats = nullptr);

struct Decision {
  bool feasible = false;
  /// A front point satisfying both bounds, when one exists.
  std::optional<FrontPoint> witness;
};

/// Answers the decision problem by scanning the Pareto front: some route
/// satisfies both bounds iff some nondominated point does.
Decision decide(const DecisionInstance& d, const SolveOptions& opts = {});

/// Exact rational weight in [0, 1].
struct Weight {
  Time num = 1;
  Time den = 2;

  static Weight of(Time num, Time den);
};

struct LocalSearchResult {
  Route route;
  ObjectiveValues value;
};

/// Minimizes num/den * travel + (1 - num/den) * latency by 2-opt and
/// relocate moves from a seeded random start. Deterministic for a given
/// seed; no optimality guarantee.
LocalSearchResult scalarized_local_search(const Instance& inst, Weight weight,
                                          std::uint64_t seed);

}  // namespace mldp
