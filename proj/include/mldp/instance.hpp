#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mldp/error.hpp"

namespace mldp {

/// Integer time unit used for travel times, service times and both
/// objectives. All arithmetic is exact; instances whose objective values
/// could exceed this type are rejected at construction. Fractional inputs
/// must be pre-scaled by the caller.
using Time = std::int64_t;

/// Vertex index. 0 is the depot, clients are 1..n.
using Client = std::int32_t;

/// A single-vehicle routing instance: the depot plus n clients and a
/// travel-time matrix with service times on the diagonal.
///
/// t(i, j) for i != j is the travel time from vertex i to vertex j; the
/// matrix may be asymmetric. t(i, i) is the service time at vertex i, and
/// the depot has none (t(0, 0) = 0).
class Instance {
 public:
  /// Validates and adopts a flat row-major (n+1) x (n+1) matrix.
  /// Rejects negative entries, a nonzero t(0, 0), a size mismatch, and
  /// values large enough that an objective could overflow Time.
  static Instance from_matrix(Client clients, std::vector<Time> times);

  Client clients() const { return n_; }
  Client vertices() const { return n_ + 1; }

  Time time(Client i, Client j) const { return t_[index(i, j)]; }
  Time service(Client i) const { return t_[index(i, i)]; }

  /// Per-arc cost c(i, j) = t(i, i) + t(i, j): leaving vertex i costs its
  /// service time plus the travel time of the arc taken.
  Time cost(Client i, Client j) const { return service(i) + time(i, j); }

  /// Row-major view of the underlying matrix.
  std::span<const Time> raw() const { return t_; }

  bool operator==(const Instance&) const = default;

 private:
  Instance(Client n, std::vector<Time> t) : n_(n), t_(std::move(t)) {}

  std::size_t index(Client i, Client j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(vertices()) +
           static_cast<std::size_t>(j);
  }

  Client n_ = 0;
  std::vector<Time> t_;
};

/// Materialized per-arc costs of an instance.
class CostMatrix {
 public:
  Client vertices() const { return m_; }

  Time at(Client i, Client j) const {
    return c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
              static_cast<std::size_t>(j)];
  }

  std::span<const Time> raw() const { return c_; }

 private:
  friend CostMatrix build_cost_matrix(const Instance&);
  CostMatrix(Client m, std::vector<Time> c) : m_(m), c_(std::move(c)) {}

  Client m_ = 0;
  std::vector<Time> c_;
};

CostMatrix build_cost_matrix(const Instance& inst);

/// A visiting order of the clients: position k (1-based) holds the k-th
/// client served. The depot is implicit at both ends and never appears in
/// the order.
class Route {
 public:
  /// Validates that `order` is a permutation of {1..n}.
  static Route of(std::vector<Client> order, Client clients);

  std::span<const Client> order() const { return order_; }
  Client length() const { return static_cast<Client>(order_.size()); }

  bool operator==(const Route&) const = default;

 private:
  explicit Route(std::vector<Client> order) : order_(std::move(order)) {}

  std::vector<Client> order_;
};

}  // namespace mldp
