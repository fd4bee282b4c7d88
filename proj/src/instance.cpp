#include "mldp/instance.hpp"

#include <limits>
#include <string>

namespace mldp {

namespace {

// Largest matrix entry that keeps every objective representable: travel
// sums n+1 costs and latency weights them by at most n, each cost is at
// most two entries, so (n+1)(n+2) * max_entry bounds both objectives.
Time entry_limit(Client clients) {
  const Time v = static_cast<Time>(clients) + 1;
  return std::numeric_limits<Time>::max() / (v * (v + 1));
}

}  // namespace

Instance Instance::from_matrix(Client clients, std::vector<Time> times) {
  if (clients < 1)
    fail(Status::invalid_argument, "instance needs at least one client");
  const std::size_t v = static_cast<std::size_t>(clients) + 1;
  if (times.size() != v * v)
    fail(Status::invalid_argument,
         "time matrix must have " + std::to_string(v * v) + " entries, got " +
             std::to_string(times.size()));
  if (times[0] != 0)
    fail(Status::invalid_argument, "depot service time t(0, 0) must be 0");
  const Time limit = entry_limit(clients);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0)
      fail(Status::invalid_argument,
           "time matrix entries must be non-negative (entry " +
               std::to_string(i) + " is " + std::to_string(times[i]) + ")");
    if (times[i] > limit)
      fail(Status::overflow,
           "time matrix entry " + std::to_string(times[i]) +
               " risks objective overflow at this size (limit " +
               std::to_string(limit) + ")");
  }
  return Instance(clients, std::move(times));
}

CostMatrix build_cost_matrix(const Instance& inst) {
  const Client v = inst.vertices();
  std::vector<Time> costs(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
  for (Client i = 0; i < v; ++i) {
    const Time service = inst.service(i);
    for (Client j = 0; j < v; ++j)
      costs[static_cast<std::size_t>(i) * static_cast<std::size_t>(v) +
            static_cast<std::size_t>(j)] = service + inst.time(i, j);
  }
  return CostMatrix(v, std::move(costs));
}

Route Route::of(std::vector<Client> order, Client clients) {
  if (static_cast<Client>(order.size()) != clients)
    fail(Status::not_permutation,
         "route visits " + std::to_string(order.size()) + " clients, expected " +
             std::to_string(clients));
  std::vector<bool> seen(static_cast<std::size_t>(clients) + 1, false);
  for (Client c : order) {
    if (c < 1 || c > clients)
      fail(Status::not_permutation,
           "route entry " + std::to_string(c) + " out of range 1.." +
               std::to_string(clients));
    if (seen[static_cast<std::size_t>(c)])
      fail(Status::not_permutation,
           "route visits client " + std::to_string(c) + " twice");
    seen[static_cast<std::size_t>(c)] = true;
  }
  return Route(std::move(order));
}

}  // namespace mldp
