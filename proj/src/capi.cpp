#include "mldp.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mldp/io.hpp"
#include "mldp/objectives.hpp"
#include "mldp/reduce.hpp"
#include "mldp/solve.hpp"
#include "mldp/verify.hpp"

struct mldp_instance {
  mldp::Instance inst;
};

struct mldp_tsp {
  mldp::TspDecisionInstance tsp;
};

struct mldp_front {
  mldp::ParetoFront front;
  mldp::SolveStats stats;
  mldp::Client clients = 0;
};

namespace {

thread_local std::string t_error;

mldp_status map_status(mldp::Status s) {
  switch (s) {
  case mldp::Status::ok:
    return MLDP_OK;
  case mldp::Status::invalid_argument:
    return MLDP_ERR_INVALID_ARGUMENT;
  case mldp::Status::parse_error:
    return MLDP_ERR_PARSE;
  case mldp::Status::not_permutation:
    return MLDP_ERR_NOT_PERMUTATION;
  case mldp::Status::too_large:
    return MLDP_ERR_TOO_LARGE;
  case mldp::Status::overflow:
    return MLDP_ERR_OVERFLOW;
  }
  return MLDP_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the thread-local
// error message. fn returns MLDP_OK or an argument-check failure.
template <class Fn>
mldp_status guarded(Fn&& fn) {
  try {
    t_error.clear();
    return fn();
  } catch (const mldp::Error& e) {
    t_error = e.what();
    return map_status(e.status());
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return MLDP_ERR_NOMEM;
  } catch (const std::exception& e) {
    t_error = e.what();
    return MLDP_ERR_INTERNAL;
  } catch (...) {
    t_error = "unknown failure";
    return MLDP_ERR_INTERNAL;
  }
}

mldp_status arg_error(const char* message) {
  t_error = message;
  return MLDP_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mldp::SolveOptions to_options(const mldp_solve_options* opts) {
  mldp::SolveOptions o;
  if (!opts)
    return o;
  switch (opts->method) {
  case MLDP_METHOD_BRUTE_FORCE:
    o.method = mldp::Method::brute_force;
    break;
  case MLDP_METHOD_DP:
    o.method = mldp::Method::dp;
    break;
  default:
    mldp::fail(mldp::Status::invalid_argument, "unknown solve method");
  }
  o.jobs = opts->jobs;
  o.brute_force_limit = opts->brute_force_limit;
  o.dp_limit = opts->dp_limit;
  o.label_cap = static_cast<std::size_t>(opts->label_cap);
  return o;
}

std::vector<mldp::Client> to_route(const int32_t* route, int32_t len) {
  if (len < 0)
    mldp::fail(mldp::Status::invalid_argument, "negative route length");
  if (len > 0 && !route)
    mldp::fail(mldp::Status::invalid_argument, "null route with nonzero length");
  return std::vector<mldp::Client>(route, route + len);
}

}  // namespace

extern "C" {

const char* mldp_version(void) { return "0.1.0"; }

const char* mldp_status_name(mldp_status status) {
  switch (status) {
  case MLDP_OK:
    return "ok";
  case MLDP_ERR_INVALID_ARGUMENT:
    return "invalid-argument";
  case MLDP_ERR_PARSE:
    return "parse-error";
  case MLDP_ERR_NOT_PERMUTATION:
    return "not-permutation";
  case MLDP_ERR_TOO_LARGE:
    return "too-large";
  case MLDP_ERR_OVERFLOW:
    return "overflow";
  case MLDP_ERR_NOMEM:
    return "out-of-memory";
  case MLDP_ERR_INTERNAL:
    return "internal-error";
  }
  return "unknown";
}

const char* mldp_last_error(void) { return t_error.c_str(); }

mldp_status mldp_instance_create(int32_t clients, const int64_t* times,
                                 mldp_instance** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (clients < 1)
      return arg_error("instance needs at least one client");
    if (!times)
      return arg_error("null time matrix");
    const std::size_t side = static_cast<std::size_t>(clients) + 1;
    std::vector<mldp::Time> copy(times, times + side * side);
    *out = new mldp_instance{mldp::Instance::from_matrix(clients, std::move(copy))};
    return MLDP_OK;
  });
}

void mldp_instance_free(mldp_instance* inst) { delete inst; }

int32_t mldp_instance_clients(const mldp_instance* inst) {
  return inst ? inst->inst.clients() : 0;
}

mldp_status mldp_instance_time(const mldp_instance* inst, int32_t from, int32_t to,
                               int64_t* out) {
  return guarded([&]() -> mldp_status {
    if (!inst || !out)
      return arg_error("null argument");
    if (from < 0 || from > inst->inst.clients() || to < 0 ||
        to > inst->inst.clients())
      return arg_error("vertex index out of range");
    *out = inst->inst.time(from, to);
    return MLDP_OK;
  });
}

mldp_status mldp_instance_cost(const mldp_instance* inst, int32_t from, int32_t to,
                               int64_t* out) {
  return guarded([&]() -> mldp_status {
    if (!inst || !out)
      return arg_error("null argument");
    if (from < 0 || from > inst->inst.clients() || to < 0 ||
        to > inst->inst.clients())
      return arg_error("vertex index out of range");
    *out = inst->inst.cost(from, to);
    return MLDP_OK;
  });
}

mldp_status mldp_instance_parse(const char* text, mldp_instance** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!text)
      return arg_error("null text");
    *out = new mldp_instance{mldp::parse_instance(text)};
    return MLDP_OK;
  });
}

mldp_status mldp_instance_render(const mldp_instance* inst, char** out) {
  return guarded([&]() -> mldp_status {
    if (!inst || !out)
      return arg_error("null argument");
    *out = dup_string(mldp::render_instance(inst->inst));
    return MLDP_OK;
  });
}

mldp_status mldp_decision_parse(const char* text, mldp_instance** out,
                                int64_t* theta, int64_t* omega) {
  return guarded([&]() -> mldp_status {
    if (!out || !theta || !omega)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!text)
      return arg_error("null text");
    mldp::DecisionInstance d = mldp::parse_decision_instance(text);
    *theta = d.theta;
    *omega = d.omega;
    *out = new mldp_instance{std::move(d.inst)};
    return MLDP_OK;
  });
}

mldp_status mldp_decision_render(const mldp_instance* inst, int64_t theta,
                                 int64_t omega, char** out) {
  return guarded([&]() -> mldp_status {
    if (!inst || !out)
      return arg_error("null argument");
    mldp::DecisionInstance d =
        mldp::DecisionInstance::of(inst->inst, theta, omega);
    *out = dup_string(mldp::render_decision_instance(d));
    return MLDP_OK;
  });
}

void mldp_string_free(char* text) { delete[] text; }

mldp_status mldp_instance_generate(const mldp_generator_spec* spec,
                                   mldp_instance** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!spec)
      return arg_error("null generator spec");
    if (spec->family < MLDP_FAMILY_EUCLIDEAN ||
        spec->family > MLDP_FAMILY_CONSTANT_SERVICE)
      return arg_error("unknown instance family");
    mldp::GeneratorSpec s;
    s.family = static_cast<mldp::Family>(spec->family);
    s.clients = spec->clients;
    s.seed = spec->seed;
    s.travel_min = spec->travel_min;
    s.travel_max = spec->travel_max;
    s.service_min = spec->service_min;
    s.service_max = spec->service_max;
    *out = new mldp_instance{mldp::generate(s)};
    return MLDP_OK;
  });
}

mldp_status mldp_evaluate(const mldp_instance* inst, const int32_t* route,
                          int32_t route_len, int64_t* travel, int64_t* latency) {
  return guarded([&]() -> mldp_status {
    if (!inst || !travel || !latency)
      return arg_error("null argument");
    const mldp::Route r =
        mldp::Route::of(to_route(route, route_len), inst->inst.clients());
    const mldp::ObjectiveValues v = mldp::evaluate(inst->inst, r);
    *travel = v.travel;
    *latency = v.latency;
    return MLDP_OK;
  });
}

mldp_status mldp_simulate_timeline(const mldp_instance* inst, const int32_t* route,
                                   int32_t route_len, int64_t* travel,
                                   int64_t* latency) {
  return guarded([&]() -> mldp_status {
    if (!inst || !travel || !latency)
      return arg_error("null argument");
    const mldp::Route r =
        mldp::Route::of(to_route(route, route_len), inst->inst.clients());
    const mldp::ObjectiveValues v = mldp::simulate_timeline(inst->inst, r);
    *travel = v.travel;
    *latency = v.latency;
    return MLDP_OK;
  });
}

const char* mldp_verdict_reason_name(mldp_verdict_reason reason) {
  return mldp::to_string(static_cast<mldp::VerdictReason>(reason));
}

mldp_status mldp_verify(const mldp_instance* inst, int64_t theta, int64_t omega,
                        const int32_t* candidate, int32_t candidate_len,
                        mldp_verdict* out) {
  return guarded([&]() -> mldp_status {
    if (!inst || !out)
      return arg_error("null argument");
    const std::vector<mldp::Client> cand = to_route(candidate, candidate_len);
    const mldp::DecisionInstance d =
        mldp::DecisionInstance::of(inst->inst, theta, omega);
    const mldp::Verdict v = mldp::verify_decision(d, cand);
    out->feasible = v.feasible ? 1 : 0;
    out->reason = static_cast<int32_t>(v.reason);
    out->has_observed = v.observed.has_value() ? 1 : 0;
    out->travel = v.observed ? v.observed->travel : 0;
    out->latency = v.observed ? v.observed->latency : 0;
    return MLDP_OK;
  });
}

mldp_status mldp_tsp_create(int32_t cities, const int64_t* costs, int64_t budget,
                            mldp_tsp** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (cities < 2)
      return arg_error("tour needs at least two cities");
    if (!costs)
      return arg_error("null cost matrix");
    const std::size_t side = static_cast<std::size_t>(cities);
    std::vector<mldp::Time> copy(costs, costs + side * side);
    *out = new mldp_tsp{
        mldp::TspDecisionInstance::of(cities, std::move(copy), budget)};
    return MLDP_OK;
  });
}

mldp_status mldp_tsp_parse(const char* text, int64_t budget, mldp_tsp** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!text)
      return arg_error("null text");
    *out = new mldp_tsp{mldp::import_tsp(text, budget)};
    return MLDP_OK;
  });
}

mldp_status mldp_tsp_render(const mldp_tsp* tsp, char** out) {
  return guarded([&]() -> mldp_status {
    if (!tsp || !out)
      return arg_error("null argument");
    *out = dup_string(mldp::render_tsp(tsp->tsp));
    return MLDP_OK;
  });
}

void mldp_tsp_free(mldp_tsp* tsp) { delete tsp; }

int32_t mldp_tsp_cities(const mldp_tsp* tsp) {
  return tsp ? tsp->tsp.cities() : 0;
}

mldp_status mldp_tsp_cost(const mldp_tsp* tsp, int32_t from, int32_t to,
                          int64_t* out) {
  return guarded([&]() -> mldp_status {
    if (!tsp || !out)
      return arg_error("null argument");
    if (from < 0 || from >= tsp->tsp.cities() || to < 0 || to >= tsp->tsp.cities())
      return arg_error("city index out of range");
    *out = tsp->tsp.cost(from, to);
    return MLDP_OK;
  });
}

int64_t mldp_tsp_budget(const mldp_tsp* tsp) {
  return tsp ? tsp->tsp.budget() : 0;
}

mldp_status mldp_latency_bound(const mldp_tsp* tsp, int64_t* omega) {
  return guarded([&]() -> mldp_status {
    if (!tsp || !omega)
      return arg_error("null argument");
    *omega = mldp::worst_case_latency_bound(tsp->tsp);
    return MLDP_OK;
  });
}

mldp_status mldp_reduce(const mldp_tsp* tsp, mldp_instance** out, int64_t* theta,
                        int64_t* omega) {
  return guarded([&]() -> mldp_status {
    if (!out || !theta || !omega)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!tsp)
      return arg_error("null tsp");
    mldp::DecisionInstance d = mldp::reduce_tsp(tsp->tsp);
    *theta = d.theta;
    *omega = d.omega;
    *out = new mldp_instance{std::move(d.inst)};
    return MLDP_OK;
  });
}

void mldp_solve_options_init(mldp_solve_options* opts) {
  if (!opts)
    return;
  const mldp::SolveOptions d;
  opts->method = d.method == mldp::Method::dp ? MLDP_METHOD_DP
                                              : MLDP_METHOD_BRUTE_FORCE;
  opts->jobs = d.jobs;
  opts->brute_force_limit = d.brute_force_limit;
  opts->dp_limit = d.dp_limit;
  opts->label_cap = static_cast<uint64_t>(d.label_cap);
}

mldp_status mldp_solve(const mldp_instance* inst, const mldp_solve_options* opts,
                       mldp_front** out) {
  return guarded([&]() -> mldp_status {
    if (!out)
      return arg_error("null output pointer");
    *out = nullptr;
    if (!inst)
      return arg_error("null instance");
    mldp::SolveStats stats;
    mldp::ParetoFront front =
        mldp::solve_front(inst->inst, to_options(opts), &stats);
    *out = new mldp_front{std::move(front), stats, inst->inst.clients()};
    return MLDP_OK;
  });
}

void mldp_front_free(mldp_front* front) { delete front; }

int32_t mldp_front_size(const mldp_front* front) {
  return front ? static_cast<int32_t>(front->front.size()) : 0;
}

int32_t mldp_front_clients(const mldp_front* front) {
  return front ? front->clients : 0;
}

mldp_status mldp_front_point(const mldp_front* front, int32_t index,
                             int64_t* travel, int64_t* latency) {
  return guarded([&]() -> mldp_status {
    if (!front || !travel || !latency)
      return arg_error("null argument");
    if (index < 0 || static_cast<std::size_t>(index) >= front->front.size())
      return arg_error("front index out of range");
    const mldp::FrontPoint& p = front->front[static_cast<std::size_t>(index)];
    *travel = p.value.travel;
    *latency = p.value.latency;
    return MLDP_OK;
  });
}

mldp_status mldp_front_witness(const mldp_front* front, int32_t index,
                               int32_t* route, int32_t capacity) {
  return guarded([&]() -> mldp_status {
    if (!front || !route)
      return arg_error("null argument");
    if (index < 0 || static_cast<std::size_t>(index) >= front->front.size())
      return arg_error("front index out of range");
    if (capacity < front->clients)
      return arg_error("route buffer too small");
    const auto order = front->front[static_cast<std::size_t>(index)].witness.order();
    std::memcpy(route, order.data(), order.size() * sizeof(int32_t));
    return MLDP_OK;
  });
}

mldp_status mldp_front_stats(const mldp_front* front, mldp_solve_stats* out) {
  return guarded([&]() -> mldp_status {
    if (!front || !out)
      return arg_error("null argument");
    out->routes_enumerated = front->stats.routes_enumerated;
    out->labels_generated = front->stats.labels_generated;
    out->labels_kept = front->stats.labels_kept;
    return MLDP_OK;
  });
}

mldp_status mldp_decide(const mldp_instance* inst, int64_t theta, int64_t omega,
                        const mldp_solve_options* opts, int32_t* feasible,
                        int32_t* witness, int32_t capacity) {
  return guarded([&]() -> mldp_status {
    if (!inst || !feasible)
      return arg_error("null argument");
    const mldp::DecisionInstance d =
        mldp::DecisionInstance::of(inst->inst, theta, omega);
    const mldp::Decision result = mldp::decide(d, to_options(opts));
    *feasible = result.feasible ? 1 : 0;
    if (result.feasible && witness) {
      if (capacity < inst->inst.clients())
        return arg_error("route buffer too small");
      const auto order = result.witness->witness.order();
      std::memcpy(witness, order.data(), order.size() * sizeof(int32_t));
    }
    return MLDP_OK;
  });
}

mldp_status mldp_local_search(const mldp_instance* inst, int64_t weight_num,
                              int64_t weight_den, uint64_t seed, int32_t* route,
                              int32_t capacity, int64_t* travel, int64_t* latency) {
  return guarded([&]() -> mldp_status {
    if (!inst || !route)
      return arg_error("null argument");
    if (capacity < inst->inst.clients())
      return arg_error("route buffer too small");
    const mldp::LocalSearchResult result = mldp::scalarized_local_search(
        inst->inst, mldp::Weight::of(weight_num, weight_den), seed);
    const auto order = result.route.order();
    std::memcpy(route, order.data(), order.size() * sizeof(int32_t));
    if (travel)
      *travel = result.value.travel;
    if (latency)
      *latency = result.value.latency;
    return MLDP_OK;
  });
}

}  // extern "C"
