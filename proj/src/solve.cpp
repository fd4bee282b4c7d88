#include "mldp/solve.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "rng.hpp"

namespace mldp {

class FrontBuilder {
 public:
  static ParetoFront make(std::vector<FrontPoint> points) {
    ParetoFront f;
    f.points_ = std::move(points);
    return f;
  }
};

namespace {

// The dynamic program tracks one mask bit per client; beyond this the state
// table no longer fits in memory anyway.
constexpr Client kDpHardLimit = 20;

void check_options(const SolveOptions& opts) {
  if (opts.jobs < 1)
    fail(Status::invalid_argument, "jobs must be at least 1");
}

ObjectiveValues eval_costs(const CostMatrix& cost, std::span<const Client> order) {
  const Client n = static_cast<Client>(order.size());
  Time arc = cost.at(0, order[0]);
  Time travel = arc;
  Time latency = static_cast<Time>(n) * arc;
  for (Client k = 1; k < n; ++k) {
    arc = cost.at(order[k - 1], order[k]);
    travel += arc;
    latency += static_cast<Time>(n - k) * arc;
  }
  travel += cost.at(order[n - 1], 0);
  return {travel, latency};
}

// Offers a pair to a nondominated set kept sorted by strictly ascending
// travel (hence strictly descending latency). Returns the slot to fill with
// the candidate's entry, or set.end() when the candidate is dominated. An
// exact pair tie leaves the set's shape unchanged and calls on_tie with the
// incumbent so the caller can apply its witness preference.
template <class E, class OnTie>
typename std::vector<E>::iterator offer(std::vector<E>& set, ObjectiveValues v,
                                        OnTie&& on_tie) {
  auto pos = std::lower_bound(
      set.begin(), set.end(), v.travel,
      [](const E& e, Time travel) { return e.value.travel < travel; });
  if (pos != set.begin() && std::prev(pos)->value.latency <= v.latency)
    return set.end();
  if (pos != set.end() && pos->value.travel == v.travel) {
    if (pos->value.latency == v.latency) {
      on_tie(*pos);
      return set.end();
    }
    if (pos->value.latency < v.latency)
      return set.end();
  }
  auto run = pos;
  while (run != set.end() && run->value.latency >= v.latency)
    ++run;
  if (run == pos)
    return set.insert(pos, E{});
  set.erase(pos + 1, run);
  return pos;
}

struct RoutedPoint {
  ObjectiveValues value;
  std::vector<Client> order;
};

// Splits [0, count) into one contiguous chunk per worker. Each worker gets
// its own stats block; chunk results must not depend on scheduling.
template <class Fn>
void run_partitioned(std::size_t count, int jobs, std::vector<SolveStats>& stats,
                     Fn&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                     count == 0 ? 1 : count));
  stats.assign(workers, SolveStats{});
  if (workers == 1) {
    fn(0, count, stats[0]);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(count, w * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      try {
        fn(lo, hi, stats[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

SolveStats sum_stats(const std::vector<SolveStats>& parts) {
  SolveStats total;
  for (const SolveStats& s : parts) {
    total.routes_enumerated += s.routes_enumerated;
    total.labels_generated += s.labels_generated;
    total.labels_kept += s.labels_kept;
  }
  return total;
}

ParetoFront finish_front(std::vector<RoutedPoint> merged, Client n) {
  std::vector<FrontPoint> points;
  points.reserve(merged.size());
  for (RoutedPoint& p : merged)
    points.push_back(FrontPoint{p.value, Route::of(std::move(p.order), n)});
  return FrontBuilder::make(std::move(points));
}

// Label-setting state: one nondominated set per (visited mask, last client)
// pair, with parent pointers for witness reconstruction. Levels are built
// in popcount order, so a level only reads finalized lower levels; that
// makes the result independent of the worker count.
class DpTable {
 public:
  DpTable(const Instance& inst, const SolveOptions& opts)
      : n_(inst.clients()), cost_(build_cost_matrix(inst)),
        cap_(opts.label_cap), states_(static_cast<std::size_t>(n_) << n_) {}

  void build(int jobs, std::vector<SolveStats>& stats) {
    stats.assign(1, SolveStats{});
    for (Client c = 1; c <= n_; ++c) {
      const Time arc = cost_.at(0, c);
      states_[state_index(bit(c), c)].push_back(
          Label{{arc, static_cast<Time>(n_) * arc}, 0, -1});
      ++stats[0].labels_generated;
    }
    std::vector<std::vector<std::uint32_t>> by_level(
        static_cast<std::size_t>(n_) + 1);
    const std::uint32_t full = (n_ >= 32) ? 0 : ((1u << n_) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
      by_level[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (Client level = 2; level <= n_; ++level) {
      const auto& masks = by_level[static_cast<std::size_t>(level)];
      std::vector<SolveStats> level_stats;
      run_partitioned(masks.size(), jobs, level_stats,
                      [&](std::size_t lo, std::size_t hi, SolveStats& s) {
                        SolveStats local;
                        for (std::size_t m = lo; m < hi; ++m)
                          extend_into(masks[m], level, local);
                        s = local;
                      });
      const SolveStats level_total = sum_stats(level_stats);
      stats[0].labels_generated += level_total.labels_generated;
    }
    for (const auto& labels : states_)
      stats[0].labels_kept += labels.size();
  }

  ParetoFront front() const {
    const std::uint32_t full = (1u << n_) - 1;
    std::vector<RoutedPoint> merged;
    for (Client last = 1; last <= n_; ++last) {
      const Time back = cost_.at(last, 0);
      const auto& labels = states_[state_index(full, last)];
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const ObjectiveValues v{labels[i].value.travel + back,
                                labels[i].value.latency};
        auto slot = offer(merged, v, [&](RoutedPoint& incumbent) {
          auto candidate = chain_order(full, last, static_cast<std::int32_t>(i));
          if (std::lexicographical_compare(candidate.begin(), candidate.end(),
                                           incumbent.order.begin(),
                                           incumbent.order.end()))
            incumbent.order = std::move(candidate);
        });
        if (slot != merged.end())
          *slot = RoutedPoint{v, chain_order(full, last,
                                             static_cast<std::int32_t>(i))};
      }
    }
    return finish_front(std::move(merged), n_);
  }

 private:
  struct Label {
    ObjectiveValues value;
    Client pred_last = 0;
    std::int32_t pred_index = -1;
  };

  static std::uint32_t bit(Client c) { return 1u << (c - 1); }

  std::size_t state_index(std::uint32_t mask, Client last) const {
    return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(last - 1);
  }

  // Visiting order of the chain ending at the given label. Walks parent
  // pointers depot-ward, filling the order back to front.
  std::vector<Client> chain_order(std::uint32_t mask, Client last,
                                  std::int32_t index) const {
    std::vector<Client> order(static_cast<std::size_t>(std::popcount(mask)));
    std::size_t at = order.size();
    while (last != 0) {
      order[--at] = last;
      const Label& label =
          states_[state_index(mask, last)][static_cast<std::size_t>(index)];
      mask ^= bit(last);
      last = label.pred_last;
      index = label.pred_index;
    }
    return order;
  }

  // Builds every (mask, last) state of one mask by pulling from the
  // finalized previous level. The arc into the level-th visited client is
  // still waited on by n - level + 1 clients.
  void extend_into(std::uint32_t mask, Client level, SolveStats& stats) {
    const Time weight = static_cast<Time>(n_ - level + 1);
    for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1) {
      const Client last = static_cast<Client>(std::countr_zero(rem)) + 1;
      auto& out = states_[state_index(mask, last)];
      const std::uint32_t pred_mask = mask ^ bit(last);
      for (std::uint32_t prem = pred_mask; prem != 0; prem &= prem - 1) {
        const Client pl = static_cast<Client>(std::countr_zero(prem)) + 1;
        const auto& preds = states_[state_index(pred_mask, pl)];
        const Time arc = cost_.at(pl, last);
        for (std::size_t i = 0; i < preds.size(); ++i) {
          const ObjectiveValues v{preds[i].value.travel + arc,
                                  preds[i].value.latency + weight * arc};
          ++stats.labels_generated;
          const auto pi = static_cast<std::int32_t>(i);
          auto slot = offer(out, v, [&](Label& incumbent) {
            // Pair tie: both chains end with `last`, so comparing the
            // stored prefixes decides the lexicographic order of any
            // completed route.
            auto candidate = chain_order(pred_mask, pl, pi);
            auto kept = chain_order(pred_mask, incumbent.pred_last,
                                    incumbent.pred_index);
            if (std::lexicographical_compare(candidate.begin(), candidate.end(),
                                             kept.begin(), kept.end())) {
              incumbent.pred_last = pl;
              incumbent.pred_index = pi;
            }
          });
          if (slot != out.end())
            *slot = Label{v, pl, pi};
        }
      }
      if (cap_ != 0 && out.size() > cap_)
        out.resize(cap_);
    }
  }

  Client n_;
  CostMatrix cost_;
  std::size_t cap_;
  std::vector<std::vector<Label>> states_;
};

}  // namespace

ParetoFront brute_force_front(const Instance& inst, const SolveOptions& opts,
                              SolveStats* stats) {
  check_options(opts);
  const Client n = inst.clients();
  if (n > opts.brute_force_limit)
    fail(Status::too_large,
         "exhaustive enumeration limited to " +
             std::to_string(opts.brute_force_limit) + " clients, got " +
             std::to_string(n));
  const CostMatrix cost = build_cost_matrix(inst);

  // One partition per first client; within a partition suffixes enumerate
  // in lexicographic order, so first-wins pair ties keep the smallest
  // witness, and merging partitions in order preserves that globally.
  std::vector<std::vector<RoutedPoint>> parts(static_cast<std::size_t>(n));
  std::vector<SolveStats> worker_stats;
  run_partitioned(
      static_cast<std::size_t>(n), opts.jobs, worker_stats,
      [&](std::size_t lo, std::size_t hi, SolveStats& s) {
        SolveStats local;
        std::vector<Client> order(static_cast<std::size_t>(n));
        for (std::size_t f = lo; f < hi; ++f) {
          const Client first = static_cast<Client>(f) + 1;
          order[0] = first;
          std::size_t at = 1;
          for (Client c = 1; c <= n; ++c)
            if (c != first)
              order[at++] = c;
          do {
            const ObjectiveValues v = eval_costs(cost, order);
            ++local.routes_enumerated;
            auto slot = offer(parts[f], v, [](RoutedPoint&) {});
            if (slot != parts[f].end())
              *slot = RoutedPoint{v, order};
          } while (std::next_permutation(order.begin() + 1, order.end()));
        }
        s = local;
      });

  std::vector<RoutedPoint> merged;
  for (auto& part : parts) {
    for (RoutedPoint& p : part) {
      auto slot = offer(merged, p.value, [](RoutedPoint&) {});
      if (slot != merged.end())
        *slot = std::move(p);
    }
  }
  if (stats)
    *stats = sum_stats(worker_stats);
  return finish_front(std::move(merged), n);
}

ParetoFront dp_front(const Instance& inst, const SolveOptions& opts,
                     SolveStats* stats) {
  check_options(opts);
  const Client n = inst.clients();
  const Client limit = std::min(opts.dp_limit, kDpHardLimit);
  if (n > limit)
    fail(Status::too_large,
         "dynamic program limited to " + std::to_string(limit) +
             " clients, got " + std::to_string(n));
  DpTable table(inst, opts);
  std::vector<SolveStats> table_stats;
  table.build(opts.jobs, table_stats);
  if (stats)
    *stats = sum_stats(table_stats);
  return table.front();
}

ParetoFront solve_front(const Instance& inst, const SolveOptions& opts,
                        SolveStats* stats) {
  switch (opts.method) {
  case Method::brute_force:
    return brute_force_front(inst, opts, stats);
  case Method::dp:
    return dp_front(inst, opts, stats);
  }
  fail(Status::invalid_argument, "unknown solve method");
}

Decision decide(const DecisionInstance& d, const SolveOptions& opts) {
  const ParetoFront front = solve_front(d.inst, opts);
  for (const FrontPoint& p : front.points())
    if (p.value.travel <= d.theta && p.value.latency <= d.omega)
      return Decision{true, p};
  return Decision{false, std::nullopt};
}

Weight Weight::of(Time num, Time den) {
  if (den < 1 || num < 0 || num > den)
    fail(Status::invalid_argument,
         "weight must be a rational in [0, 1] with a positive denominator");
  return Weight{num, den};
}

LocalSearchResult scalarized_local_search(const Instance& inst, Weight weight,
                                          std::uint64_t seed) {
  const Client n = inst.clients();
  const CostMatrix cost = build_cost_matrix(inst);

  std::vector<Client> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Client{1});
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(detail::bounded(rng, 0, i));
    std::swap(order[i], order[j]);
  }

  // Wider than Time so the weighted sum cannot overflow.
  const auto score = [&](std::span<const Client> o) -> __int128 {
    const ObjectiveValues v = eval_costs(cost, o);
    return static_cast<__int128>(weight.num) * v.travel +
           static_cast<__int128>(weight.den - weight.num) * v.latency;
  };

  __int128 best = score(order);
  bool improved = true;
  while (improved) {
    improved = false;
    // Segment reversals.
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        std::reverse(order.begin() + i, order.begin() + j + 1);
        const __int128 s = score(order);
        if (s < best) {
          best = s;
          improved = true;
        } else {
          std::reverse(order.begin() + i, order.begin() + j + 1);
        }
      }
    }
    // Single-client relocations.
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        if (i == j)
          continue;
        const auto b = order.begin();
        if (i < j)
          std::rotate(b + i, b + i + 1, b + j + 1);
        else
          std::rotate(b + j, b + i, b + i + 1);
        const __int128 s = score(order);
        if (s < best) {
          best = s;
          improved = true;
        } else if (i < j) {
          std::rotate(b + i, b + j, b + j + 1);
        } else {
          std::rotate(b + j, b + j + 1, b + i + 1);
        }
      }
    }
  }

  const ObjectiveValues value = eval_costs(cost, order);
  return LocalSearchResult{Route::of(std::move(order), n), value};
}

}  // namespace mldp
