#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "mldp.h"

namespace {

/* Two clients; route (2,1) is the lone optimum (travel 6, latency 5). */
const std::vector<std::int64_t> kTwoClients{0, 2, 0, 0, 1, 3, 4, 0, 5};

struct InstanceGuard {
  mldp_instance* ptr = nullptr;
  ~InstanceGuard() { mldp_instance_free(ptr); }
};

struct TspGuard {
  mldp_tsp* ptr = nullptr;
  ~TspGuard() { mldp_tsp_free(ptr); }
};

struct FrontGuard {
  mldp_front* ptr = nullptr;
  ~FrontGuard() { mldp_front_free(ptr); }
};

mldp_instance* make_two_clients() {
  mldp_instance* inst = nullptr;
  REQUIRE(mldp_instance_create(2, kTwoClients.data(), &inst) == MLDP_OK);
  return inst;
}

}  // namespace

TEST_CASE("version and status names are stable strings") {
  CHECK(std::string(mldp_version()) == "0.1.0");
  CHECK(std::string(mldp_status_name(MLDP_OK)) == "ok");
  CHECK(std::string(mldp_status_name(MLDP_ERR_INVALID_ARGUMENT)) ==
        "invalid-argument");
  CHECK(std::string(mldp_status_name(MLDP_ERR_PARSE)) == "parse-error");
  CHECK(std::string(mldp_status_name(MLDP_ERR_NOT_PERMUTATION)) ==
        "not-permutation");
  CHECK(std::string(mldp_status_name(MLDP_ERR_TOO_LARGE)) == "too-large");
  CHECK(std::string(mldp_status_name(MLDP_ERR_OVERFLOW)) == "overflow");
}

TEST_CASE("create, inspect, and free an instance") {
  InstanceGuard g{make_two_clients()};
  CHECK(mldp_instance_clients(g.ptr) == 2);

  std::int64_t value = -1;
  REQUIRE(mldp_instance_time(g.ptr, 0, 1, &value) == MLDP_OK);
  CHECK(value == 2);
  REQUIRE(mldp_instance_time(g.ptr, 2, 2, &value) == MLDP_OK);
  CHECK(value == 5);
  /* c(2, 1) = t(2, 2) + t(2, 1) = 5 + 0. */
  REQUIRE(mldp_instance_cost(g.ptr, 2, 1, &value) == MLDP_OK);
  CHECK(value == 5);
  CHECK(mldp_instance_time(g.ptr, 3, 0, &value) == MLDP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mldp_last_error()).size() > 0);
}

TEST_CASE("null arguments are rejected, never dereferenced") {
  mldp_instance* inst = nullptr;
  CHECK(mldp_instance_create(2, nullptr, &inst) == MLDP_ERR_INVALID_ARGUMENT);
  CHECK(mldp_instance_create(2, kTwoClients.data(), nullptr) ==
        MLDP_ERR_INVALID_ARGUMENT);
  CHECK(mldp_instance_parse(nullptr, &inst) == MLDP_ERR_INVALID_ARGUMENT);
  CHECK(mldp_instance_clients(nullptr) == 0);
  CHECK(mldp_front_size(nullptr) == 0);
  mldp_instance_free(nullptr);
  mldp_tsp_free(nullptr);
  mldp_front_free(nullptr);
  mldp_string_free(nullptr);
}

TEST_CASE("the last error message tracks the most recent call") {
  InstanceGuard g{make_two_clients()};
  std::int64_t value = 0;
  CHECK(mldp_instance_time(g.ptr, 9, 9, &value) == MLDP_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(mldp_last_error()) > 0);
  CHECK(mldp_instance_time(g.ptr, 0, 0, &value) == MLDP_OK);
  CHECK(std::strlen(mldp_last_error()) == 0);
}

TEST_CASE("invalid matrices report the matching status") {
  mldp_instance* inst = nullptr;
  std::vector<std::int64_t> bad = kTwoClients;
  bad[0] = 3;
  CHECK(mldp_instance_create(2, bad.data(), &inst) == MLDP_ERR_INVALID_ARGUMENT);
  bad = kTwoClients;
  bad[4] = -1;
  CHECK(mldp_instance_create(2, bad.data(), &inst) == MLDP_ERR_INVALID_ARGUMENT);
  CHECK(inst == nullptr);
}

TEST_CASE("text round-trips through parse and render") {
  InstanceGuard g{make_two_clients()};
  char* text = nullptr;
  REQUIRE(mldp_instance_render(g.ptr, &text) == MLDP_OK);
  CHECK(std::string(text) == "mldp 1\nn 2\n0 2 0\n0 1 3\n4 0 5\n");

  InstanceGuard back;
  REQUIRE(mldp_instance_parse(text, &back.ptr) == MLDP_OK);
  mldp_string_free(text);
  CHECK(mldp_instance_clients(back.ptr) == 2);
  std::int64_t value = 0;
  REQUIRE(mldp_instance_time(back.ptr, 2, 0, &value) == MLDP_OK);
  CHECK(value == 4);

  InstanceGuard none;
  CHECK(mldp_instance_parse("mldp 2\n", &none.ptr) == MLDP_ERR_PARSE);
}

TEST_CASE("decision text carries both bounds") {
  InstanceGuard g{make_two_clients()};
  char* text = nullptr;
  REQUIRE(mldp_decision_render(g.ptr, 15, 8, &text) == MLDP_OK);

  InstanceGuard back;
  std::int64_t theta = 0;
  std::int64_t omega = 0;
  REQUIRE(mldp_decision_parse(text, &back.ptr, &theta, &omega) == MLDP_OK);
  mldp_string_free(text);
  CHECK(theta == 15);
  CHECK(omega == 8);
  CHECK(mldp_instance_clients(back.ptr) == 2);
}

TEST_CASE("generation through the C surface is deterministic") {
  mldp_generator_spec spec{};
  spec.family = MLDP_FAMILY_ASYMMETRIC_UNIFORM;
  spec.clients = 5;
  spec.seed = 99;
  spec.travel_min = 1;
  spec.travel_max = 40;
  spec.service_min = 0;
  spec.service_max = 6;

  InstanceGuard a;
  InstanceGuard b;
  REQUIRE(mldp_instance_generate(&spec, &a.ptr) == MLDP_OK);
  REQUIRE(mldp_instance_generate(&spec, &b.ptr) == MLDP_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  REQUIRE(mldp_instance_render(a.ptr, &ta) == MLDP_OK);
  REQUIRE(mldp_instance_render(b.ptr, &tb) == MLDP_OK);
  CHECK(std::string(ta) == std::string(tb));
  mldp_string_free(ta);
  mldp_string_free(tb);

  spec.family = 17;
  InstanceGuard c;
  CHECK(mldp_instance_generate(&spec, &c.ptr) == MLDP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("both objective entry points agree on the example") {
  InstanceGuard g{make_two_clients()};
  const std::int32_t forward[]{1, 2};
  const std::int32_t backward[]{2, 1};
  std::int64_t travel = 0;
  std::int64_t latency = 0;

  REQUIRE(mldp_evaluate(g.ptr, forward, 2, &travel, &latency) == MLDP_OK);
  CHECK(travel == 15);
  CHECK(latency == 8);
  REQUIRE(mldp_simulate_timeline(g.ptr, forward, 2, &travel, &latency) == MLDP_OK);
  CHECK(travel == 15);
  CHECK(latency == 8);

  REQUIRE(mldp_evaluate(g.ptr, backward, 2, &travel, &latency) == MLDP_OK);
  CHECK(travel == 6);
  CHECK(latency == 5);

  const std::int32_t dup[]{1, 1};
  CHECK(mldp_evaluate(g.ptr, dup, 2, &travel, &latency) ==
        MLDP_ERR_NOT_PERMUTATION);
  CHECK(mldp_evaluate(g.ptr, forward, 1, &travel, &latency) ==
        MLDP_ERR_NOT_PERMUTATION);
}

TEST_CASE("the verifier returns verdicts instead of errors") {
  InstanceGuard g{make_two_clients()};
  mldp_verdict v{};

  const std::int32_t good[]{1, 2};
  REQUIRE(mldp_verify(g.ptr, 15, 8, good, 2, &v) == MLDP_OK);
  CHECK(v.feasible == 1);
  CHECK(v.reason == MLDP_VERDICT_OK);
  CHECK(v.has_observed == 1);
  CHECK(v.travel == 15);
  CHECK(v.latency == 8);

  REQUIRE(mldp_verify(g.ptr, 14, 8, good, 2, &v) == MLDP_OK);
  CHECK(v.feasible == 0);
  CHECK(v.reason == MLDP_VERDICT_TRAVEL_EXCEEDS_THETA);

  REQUIRE(mldp_verify(g.ptr, 15, 7, good, 2, &v) == MLDP_OK);
  CHECK(v.feasible == 0);
  CHECK(v.reason == MLDP_VERDICT_LATENCY_EXCEEDS_OMEGA);

  const std::int32_t mangled[]{1, 1};
  REQUIRE(mldp_verify(g.ptr, 100, 100, mangled, 2, &v) == MLDP_OK);
  CHECK(v.feasible == 0);
  CHECK(v.reason == MLDP_VERDICT_NOT_PERMUTATION);
  CHECK(v.has_observed == 0);

  REQUIRE(mldp_verify(g.ptr, 100, 100, nullptr, 0, &v) == MLDP_OK);
  CHECK(v.feasible == 0);

  CHECK(std::string(mldp_verdict_reason_name(MLDP_VERDICT_OK)) == "ok");
  CHECK(std::string(mldp_verdict_reason_name(
            MLDP_VERDICT_TRAVEL_EXCEEDS_THETA)) == "travel-exceeds-theta");
}

TEST_CASE("tsp handles expose costs, budget, and the latency bound") {
  const std::int64_t costs[]{0, 2, 9, 7, 0, 3, 5, 8, 0};
  TspGuard tsp;
  REQUIRE(mldp_tsp_create(3, costs, 14, &tsp.ptr) == MLDP_OK);
  CHECK(mldp_tsp_cities(tsp.ptr) == 3);
  CHECK(mldp_tsp_budget(tsp.ptr) == 14);
  std::int64_t value = 0;
  REQUIRE(mldp_tsp_cost(tsp.ptr, 1, 2, &value) == MLDP_OK);
  CHECK(value == 3);

  std::int64_t omega = 0;
  REQUIRE(mldp_latency_bound(tsp.ptr, &omega) == MLDP_OK);
  CHECK(omega == 50);

  char* text = nullptr;
  REQUIRE(mldp_tsp_render(tsp.ptr, &text) == MLDP_OK);
  TspGuard back;
  REQUIRE(mldp_tsp_parse(text, 14, &back.ptr) == MLDP_OK);
  mldp_string_free(text);
  CHECK(mldp_tsp_cities(back.ptr) == 3);

  InstanceGuard reduced;
  std::int64_t theta = 0;
  omega = 0;
  REQUIRE(mldp_reduce(tsp.ptr, &reduced.ptr, &theta, &omega) == MLDP_OK);
  CHECK(theta == 14);
  CHECK(omega == 50);
  CHECK(mldp_instance_clients(reduced.ptr) == 2);
  REQUIRE(mldp_instance_time(reduced.ptr, 1, 1, &value) == MLDP_OK);
  CHECK(value == 0);
}

TEST_CASE("solving exposes the front, witnesses, and counters") {
  InstanceGuard g{make_two_clients()};
  mldp_solve_options opts;
  mldp_solve_options_init(&opts);
  CHECK(opts.method == MLDP_METHOD_DP);
  CHECK(opts.jobs == 1);
  CHECK(opts.label_cap == 0);

  FrontGuard front;
  REQUIRE(mldp_solve(g.ptr, &opts, &front.ptr) == MLDP_OK);
  REQUIRE(mldp_front_size(front.ptr) == 1);
  CHECK(mldp_front_clients(front.ptr) == 2);

  std::int64_t travel = 0;
  std::int64_t latency = 0;
  REQUIRE(mldp_front_point(front.ptr, 0, &travel, &latency) == MLDP_OK);
  CHECK(travel == 6);
  CHECK(latency == 5);
  CHECK(mldp_front_point(front.ptr, 1, &travel, &latency) ==
        MLDP_ERR_INVALID_ARGUMENT);

  std::int32_t route[2]{};
  REQUIRE(mldp_front_witness(front.ptr, 0, route, 2) == MLDP_OK);
  CHECK(route[0] == 2);
  CHECK(route[1] == 1);
  CHECK(mldp_front_witness(front.ptr, 0, route, 1) ==
        MLDP_ERR_INVALID_ARGUMENT);

  mldp_solve_stats stats{};
  REQUIRE(mldp_front_stats(front.ptr, &stats) == MLDP_OK);
  CHECK(stats.labels_generated > 0);

  /* Defaults apply when opts is NULL. */
  FrontGuard defaulted;
  REQUIRE(mldp_solve(g.ptr, nullptr, &defaulted.ptr) == MLDP_OK);
  CHECK(mldp_front_size(defaulted.ptr) == 1);
}

TEST_CASE("decide answers and optionally writes a witness") {
  InstanceGuard g{make_two_clients()};
  std::int32_t feasible = -1;
  std::int32_t route[2]{};

  REQUIRE(mldp_decide(g.ptr, 6, 5, nullptr, &feasible, route, 2) == MLDP_OK);
  CHECK(feasible == 1);
  CHECK(route[0] == 2);
  CHECK(route[1] == 1);

  REQUIRE(mldp_decide(g.ptr, 5, 5, nullptr, &feasible, nullptr, 0) == MLDP_OK);
  CHECK(feasible == 0);

  CHECK(mldp_decide(g.ptr, 6, 5, nullptr, &feasible, route, 1) ==
        MLDP_ERR_INVALID_ARGUMENT);
  CHECK(mldp_decide(g.ptr, -1, 5, nullptr, &feasible, nullptr, 0) ==
        MLDP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("local search writes a route scoring its reported pair") {
  InstanceGuard g{make_two_clients()};
  std::int32_t route[2]{};
  std::int64_t travel = 0;
  std::int64_t latency = 0;
  REQUIRE(mldp_local_search(g.ptr, 0, 1, 7, route, 2, &travel, &latency) ==
          MLDP_OK);
  /* Weight 0 minimizes latency alone; the optimum is unique here. */
  CHECK(travel == 6);
  CHECK(latency == 5);
  CHECK(route[0] == 2);
  CHECK(route[1] == 1);

  CHECK(mldp_local_search(g.ptr, 2, 1, 7, route, 2, &travel, &latency) ==
        MLDP_ERR_INVALID_ARGUMENT);
  CHECK(mldp_local_search(g.ptr, 1, 2, 7, route, 1, &travel, &latency) ==
        MLDP_ERR_INVALID_ARGUMENT);
}
