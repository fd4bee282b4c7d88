#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "mldp/instance.hpp"
#include "mldp/objectives.hpp"

namespace mldp {

/// An instance together with inclusive upper bounds on both objectives:
/// travel <= theta and latency <= omega.
struct DecisionInstance {
  Instance inst;
  Time theta = 0;
  Time omega = 0;

  /// Validates theta >= 0 and omega >= 0.
  static DecisionInstance of(Instance inst, Time theta, Time omega);
};

enum class VerdictReason {
  ok = 0,
  not_permutation,
  travel_exceeds_theta,
  latency_exceeds_omega,
};

const char* to_string(VerdictReason reason);

struct Verdict {
  bool feasible = false;
  VerdictReason reason = VerdictReason::not_permutation;
  /// Computed objectives; present whenever the candidate is a permutation,
  /// even when a bound is violated.
  std::optional<ObjectiveValues> observed;
  /// Basic operations spent, exposed so tests can pin the polynomial
  /// runtime bound.
  std::uint64_t steps = 0;
};

/// True iff `candidate` has length n and visits every client in {1..n}
/// exactly once. Total: never throws, any input sequence is accepted.
bool check_permutation(std::span<const Client> candidate, Client clients);

/// The decision-problem certificate checker. Total: malformed candidates
/// yield a not_permutation verdict rather than an error. Runs in O(n) on
/// the candidate after the permutation check.
Verdict verify_decision(const DecisionInstance& d, std::span<const Client> candidate);

}  // namespace mldp
