#include "mldp/objectives.hpp"

namespace mldp {

namespace detail {

ObjectiveValues evaluate_order(const Instance& inst, std::span<const Client> order) {
  const Client n = inst.clients();
  ObjectiveValues out;
  if (order.empty())
    return out;
  // Position-weighted sum: the arc into the k-th visited client (1-based)
  // is waited on by the n-k+1 clients still unserved when it starts.
  Time arc = inst.cost(0, order[0]);
  out.travel += arc;
  out.latency += static_cast<Time>(n) * arc;
  for (Client k = 1; k < n; ++k) {
    arc = inst.cost(order[k - 1], order[k]);
    out.travel += arc;
    out.latency += static_cast<Time>(n - k) * arc;
  }
  // Return to the depot counts toward travel only; nobody waits on it.
  out.travel += inst.cost(order[n - 1], 0);
  return out;
}

ObjectiveValues simulate_order(const Instance& inst, std::span<const Client> order) {
  ObjectiveValues out;
  if (order.empty())
    return out;
  // Accumulator walk: ride each arc, perform the destination's service on
  // arrival... except services are paid at the *source* side (cost form
  // c(i,j) = service(i) + t(i,j)), so the clock advances by the source's
  // service then the arc, and the clock is committed to latency at each
  // client arrival.
  Time clock = 0;
  Client at = 0;
  for (Client next : order) {
    clock += inst.service(at);
    clock += inst.time(at, next);
    out.latency += clock;
    at = next;
  }
  out.travel = clock + inst.service(at) + inst.time(at, 0);
  return out;
}

}  // namespace detail

ObjectiveValues evaluate(const Instance& inst, const Route& route) {
  if (route.length() != inst.clients())
    fail(Status::not_permutation, "route length does not match instance");
  return detail::evaluate_order(inst, route.order());
}

ObjectiveValues simulate_timeline(const Instance& inst, const Route& route) {
  if (route.length() != inst.clients())
    fail(Status::not_permutation, "route length does not match instance");
  return detail::simulate_order(inst, route.order());
}

}  // namespace mldp
