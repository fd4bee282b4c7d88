#pragma once

// Conversions between the library's flat types and the oracles' nested
// ones, plus seeded random instances for property tests.

#include <cstdint>
#include <span>
#include <vector>

#include "mldp/instance.hpp"
#include "mldp/io.hpp"

#include "oracles.hpp"

namespace testutil {

inline mldp::Instance make_instance(const oracle::Matrix& t) {
  const std::size_t side = t.size();
  std::vector<mldp::Time> flat;
  flat.reserve(side * side);
  for (const auto& row : t)
    for (const long long v : row)
      flat.push_back(v);
  return mldp::Instance::from_matrix(static_cast<mldp::Client>(side - 1),
                                     std::move(flat));
}

inline oracle::Matrix to_matrix(const mldp::Instance& inst) {
  const std::size_t side = static_cast<std::size_t>(inst.vertices());
  oracle::Matrix t(side, std::vector<long long>(side));
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      t[i][j] = inst.time(static_cast<mldp::Client>(i),
                          static_cast<mldp::Client>(j));
  return t;
}

inline oracle::Order to_order(std::span<const mldp::Client> order) {
  return oracle::Order(order.begin(), order.end());
}

inline std::vector<mldp::Client> to_clients(const oracle::Order& order) {
  return std::vector<mldp::Client>(order.begin(), order.end());
}

// Status thrown by fn, or Status::ok when it does not throw.
template <class Fn>
mldp::Status error_status(Fn&& fn) {
  try {
    fn();
  } catch (const mldp::Error& e) {
    return e.status();
  }
  return mldp::Status::ok;
}

// Asymmetric instance with times in [0, 100] and, optionally, service
// times in [0, 100]; fully determined by the seed.
inline mldp::Instance random_instance(mldp::Client n, std::uint64_t seed,
                                      bool with_services = true) {
  mldp::GeneratorSpec spec;
  spec.family = mldp::Family::asymmetric_uniform;
  spec.clients = n;
  spec.seed = seed;
  spec.travel_min = 0;
  spec.travel_max = 100;
  spec.service_min = 0;
  spec.service_max = with_services ? 100 : 0;
  return mldp::generate(spec);
}

}  // namespace testutil
