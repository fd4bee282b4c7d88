#include "mldp/verify.hpp"

namespace mldp {

const char* to_string(VerdictReason reason) {
  switch (reason) {
  case VerdictReason::ok:
    return "ok";
  case VerdictReason::not_permutation:
    return "not-permutation";
  case VerdictReason::travel_exceeds_theta:
    return "travel-exceeds-theta";
  case VerdictReason::latency_exceeds_omega:
    return "latency-exceeds-omega";
  }
  return "unknown";
}

DecisionInstance DecisionInstance::of(Instance inst, Time theta, Time omega) {
  if (theta < 0 || omega < 0)
    fail(Status::invalid_argument, "decision bounds must be non-negative");
  return DecisionInstance{std::move(inst), theta, omega};
}

bool check_permutation(std::span<const Client> candidate, Client clients) {
  if (static_cast<Client>(candidate.size()) != clients)
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(clients) + 1, false);
  for (Client c : candidate) {
    if (c < 1 || c > clients || seen[static_cast<std::size_t>(c)])
      return false;
    seen[static_cast<std::size_t>(c)] = true;
  }
  return true;
}

Verdict verify_decision(const DecisionInstance& dec,
                        std::span<const Client> candidate) {
  const Instance& inst = dec.inst;
  const Client n = inst.clients();
  Verdict v;

  // Permutation check: one flag per client, one step per candidate entry.
  ++v.steps;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  bool valid = static_cast<Client>(candidate.size()) == n;
  for (Client c : candidate) {
    ++v.steps;
    if (c < 1 || c > n || seen[static_cast<std::size_t>(c)]) {
      valid = false;
      break;
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
  if (!valid) {
    v.feasible = false;
    v.reason = VerdictReason::not_permutation;
    return v;
  }

  // Accumulator walk over the certificate: clock carries elapsed time,
  // latency commits the clock at each client arrival, travel closes the
  // loop back to the depot.
  Time clock = 0;
  Time latency = 0;
  Client at = 0;
  for (Client next : candidate) {
    ++v.steps;
    clock += inst.service(at);
    clock += inst.time(at, next);
    latency += clock;
    at = next;
  }
  ++v.steps;
  const Time travel = clock + inst.service(at) + inst.time(at, 0);

  v.observed = ObjectiveValues{travel, latency};
  if (travel > dec.theta) {
    v.feasible = false;
    v.reason = VerdictReason::travel_exceeds_theta;
  } else if (latency > dec.omega) {
    v.feasible = false;
    v.reason = VerdictReason::latency_exceeds_omega;
  } else {
    v.feasible = true;
    v.reason = VerdictReason::ok;
  }
  return v;
}

}  // namespace mldp
