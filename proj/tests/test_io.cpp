#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "mldp/error.hpp"
#include "mldp/io.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using mldp::Client;
using mldp::Family;
using mldp::GeneratorSpec;
using mldp::Instance;
using mldp::Status;
using mldp::Time;

namespace {

std::string parse_message(const std::string& text) {
  try {
    mldp::parse_instance(text);
  } catch (const mldp::Error& e) {
    return e.what();
  }
  return {};
}

GeneratorSpec constant_spec(Client n, Time tau) {
  GeneratorSpec spec;
  spec.family = Family::constant_travel;
  spec.clients = n;
  spec.travel_min = tau;
  spec.travel_max = tau;
  spec.service_min = 0;
  spec.service_max = 0;
  return spec;
}

}  // namespace

TEST_CASE("render produces the documented canonical text") {
  const Instance inst = testutil::make_instance({{0, 2, 0}, {0, 1, 3}, {4, 0, 5}});
  CHECK(render_instance(inst) == "mldp 1\nn 2\n0 2 0\n0 1 3\n4 0 5\n");
}

TEST_CASE("parsing a rendering recovers the original instance") {
  GeneratorSpec spec;
  for (const Family family : {Family::euclidean, Family::asymmetric_uniform,
                              Family::constant_travel, Family::constant_service}) {
    spec.family = family;
    spec.clients = 6;
    spec.seed = 11;
    if (family == Family::constant_travel) {
      spec.travel_min = spec.travel_max = 9;
      spec.service_min = spec.service_max = 0;
    } else if (family == Family::constant_service) {
      spec.travel_min = 1;
      spec.travel_max = 50;
      spec.service_min = spec.service_max = 3;
    } else {
      spec.travel_min = 1;
      spec.travel_max = 50;
      spec.service_min = 0;
      spec.service_max = 7;
    }
    const Instance inst = generate(spec);
    CHECK(mldp::parse_instance(render_instance(inst)) == inst);
  }
}

TEST_CASE("the parser tolerates comments and ragged whitespace") {
  const std::string text =
      "# cost table for the two-client demo\n"
      "mldp 1   # version\n"
      "\n"
      "n 2\r\n"
      "  0 2 0\n"
      "0\t1 3\n"
      "4 0   5   # trailing comment\n\n";
  const Instance inst = mldp::parse_instance(text);
  CHECK(inst == testutil::make_instance({{0, 2, 0}, {0, 1, 3}, {4, 0, 5}}));
}

TEST_CASE("parse errors carry token positions") {
  const std::string bad_value = "mldp 1\nn 2\n0 2 0\n0 x 3\n4 0 5\n";
  const std::string msg = parse_message(bad_value);
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(msg.find("column 3") != std::string::npos);

  CHECK(parse_message("").find("line 1") != std::string::npos);
  CHECK(parse_message("mldp 2\nn 1\n0 0\n0 0\n").find("line 1") !=
        std::string::npos);
  CHECK(parse_message("tsp 1\nn 1\n0 0\n0 0\n").find("'mldp'") !=
        std::string::npos);
  CHECK(parse_message("mldp 1\nn 0\n").find("1..") != std::string::npos);
  CHECK(parse_message("mldp 1\nn 1\n0 0\n0 0\nextra\n")
            .find("trailing") != std::string::npos);
}

TEST_CASE("semantic rejections surface the violated rule") {
  CHECK(testutil::error_status([] {
    mldp::parse_instance("mldp 1\nn 1\n5 0\n0 0\n");
  }) == Status::invalid_argument);
  try {
    mldp::parse_instance("mldp 1\nn 1\n5 0\n0 0\n");
  } catch (const mldp::Error& e) {
    CHECK(std::string(e.what()).find("t(0, 0)") != std::string::npos);
  }
  CHECK(testutil::error_status([] {
    mldp::parse_instance("mldp 1\nn 1\n0 -1\n0 0\n");
  }) == Status::invalid_argument);
}

TEST_CASE("decision instances round-trip with their bounds") {
  const mldp::DecisionInstance d = mldp::DecisionInstance::of(
      testutil::make_instance({{0, 2, 0}, {0, 1, 3}, {4, 0, 5}}), 15, 8);
  const std::string text = render_decision_instance(d);
  CHECK(text ==
        "mldpd 1\nn 2\ntheta 15\nomega 8\n0 2 0\n0 1 3\n4 0 5\n");
  const mldp::DecisionInstance back = mldp::parse_decision_instance(text);
  CHECK(back.inst == d.inst);
  CHECK(back.theta == 15);
  CHECK(back.omega == 8);
}

TEST_CASE("constant-travel generation fills every arc with the constant") {
  const Instance inst = generate(constant_spec(5, 4));
  CHECK(inst.clients() == 5);
  for (Client i = 0; i <= 5; ++i)
    for (Client j = 0; j <= 5; ++j)
      CHECK(inst.time(i, j) == (i == j ? 0 : 4));
}

TEST_CASE("generation is a pure function of its spec") {
  GeneratorSpec spec;
  spec.family = Family::asymmetric_uniform;
  spec.clients = 7;
  spec.seed = 20240817;
  spec.service_max = 13;
  const std::string once = render_instance(generate(spec));
  const std::string twice = render_instance(generate(spec));
  CHECK(once == twice);
  spec.seed += 1;
  CHECK(render_instance(generate(spec)) != once);
}

TEST_CASE("generated instances respect their declared ranges") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorSpec spec;
    spec.family = Family::asymmetric_uniform;
    spec.clients = 6;
    spec.seed = seed;
    spec.travel_min = 3;
    spec.travel_max = 9;
    spec.service_min = 1;
    spec.service_max = 2;
    const Instance inst = generate(spec);
    CHECK(inst.time(0, 0) == 0);
    for (Client i = 0; i <= 6; ++i)
      for (Client j = 0; j <= 6; ++j) {
        if (i == j && i > 0) {
          CHECK(inst.time(i, j) >= 1);
          CHECK(inst.time(i, j) <= 2);
        } else if (i != j) {
          CHECK(inst.time(i, j) >= 3);
          CHECK(inst.time(i, j) <= 9);
        }
      }
  }
}

TEST_CASE("euclidean generation yields symmetric travel times") {
  GeneratorSpec spec;
  spec.family = Family::euclidean;
  spec.clients = 8;
  spec.seed = 5;
  spec.travel_min = 0;
  spec.travel_max = 200;
  spec.service_max = 4;
  const Instance inst = generate(spec);
  for (Client i = 0; i <= 8; ++i)
    for (Client j = 0; j <= 8; ++j)
      if (i != j)
        CHECK(inst.time(i, j) == inst.time(j, i));
}

TEST_CASE("family constraints are enforced") {
  GeneratorSpec spec = constant_spec(3, 4);
  spec.travel_max = 5;
  CHECK(testutil::error_status([&] { generate(spec); }) ==
        Status::invalid_argument);

  GeneratorSpec services = constant_spec(3, 4);
  services.service_max = 1;
  CHECK(testutil::error_status([&] { generate(services); }) ==
        Status::invalid_argument);

  GeneratorSpec svc;
  svc.family = Family::constant_service;
  svc.clients = 3;
  svc.service_min = 1;
  svc.service_max = 2;
  CHECK(testutil::error_status([&] { generate(svc); }) ==
        Status::invalid_argument);

  GeneratorSpec empty;
  empty.clients = 3;
  empty.travel_min = 10;
  empty.travel_max = 2;
  CHECK(testutil::error_status([&] { generate(empty); }) ==
        Status::invalid_argument);

  GeneratorSpec none;
  none.clients = 0;
  CHECK(testutil::error_status([&] { generate(none); }) ==
        Status::invalid_argument);
}

TEST_CASE("family names round-trip through their string forms") {
  for (const Family family : {Family::euclidean, Family::asymmetric_uniform,
                              Family::constant_travel, Family::constant_service}) {
    const auto back = mldp::family_from_string(mldp::to_string(family));
    REQUIRE(back.has_value());
    CHECK(*back == family);
  }
  CHECK_FALSE(mldp::family_from_string("euclid").has_value());
  CHECK_FALSE(mldp::family_from_string("").has_value());
}

TEST_CASE("coordinate files import with rounded euclidean distances") {
  const std::string triangle =
      "NAME: tri\n"
      "TYPE: TSP\n"
      "DIMENSION: 3\n"
      "EDGE_WEIGHT_TYPE: EUC_2D\n"
      "NODE_COORD_SECTION\n"
      "1 0 0\n"
      "2 3 0\n"
      "3 0 4\n"
      "EOF\n";
  const mldp::TspDecisionInstance tsp = mldp::import_tsp(triangle, 12);
  CHECK(tsp.cities() == 3);
  CHECK(tsp.budget() == 12);
  const std::vector<std::vector<Time>> expected{{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
  for (Client i = 0; i < 3; ++i)
    for (Client j = 0; j < 3; ++j)
      CHECK(tsp.cost(i, j) == expected[i][j]);
}

TEST_CASE("half-integer distances round to the nearest even integer") {
  const std::string halves =
      "TYPE: TSP\n"
      "DIMENSION: 3\n"
      "EDGE_WEIGHT_TYPE: EUC_2D\n"
      "NODE_COORD_SECTION\n"
      "1 0.0 0.0\n"
      "2 2.5 0.0\n"
      "3 6.0 0.0\n"
      "EOF\n";
  const mldp::TspDecisionInstance tsp = mldp::import_tsp(halves, 100);
  CHECK(tsp.cost(0, 1) == 2);  // 2.5 rounds down to even 2
  CHECK(tsp.cost(1, 2) == 4);  // 3.5 rounds up to even 4
  CHECK(tsp.cost(0, 2) == 6);
}

TEST_CASE("unsupported coordinate files are rejected by name") {
  const auto import_message = [](const std::string& text) {
    try {
      mldp::import_tsp(text, 1);
    } catch (const mldp::Error& e) {
      return std::string(e.what());
    }
    return std::string{};
  };
  CHECK(import_message("TYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: CEIL_2D\n"
                       "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n")
            .find("unsupported edge weight type 'CEIL_2D'") !=
        std::string::npos);
  CHECK(import_message("TYPE: TOUR\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                       "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n")
            .find("unsupported type 'TOUR'") != std::string::npos);
  CHECK(import_message("TYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                       "NODE_COORD_SECTION\n1 0 0\n1 1 1\nEOF\n")
            .find("duplicate node id") != std::string::npos);
  CHECK(import_message("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                       "NODE_COORD_SECTION\n1 0 0\n3 1 1\nEOF\n")
            .find("missing") != std::string::npos);
}

TEST_CASE("native cost-matrix files round-trip") {
  const std::vector<Time> costs{0, 2, 9, 7, 0, 3, 5, 8, 0};
  const mldp::TspDecisionInstance tsp =
      mldp::TspDecisionInstance::of(3, {costs.begin(), costs.end()}, 14);
  const std::string text = render_tsp(tsp);
  CHECK(text == "tspd 1\nm 3\n0 2 9\n7 0 3\n5 8 0\n");
  const mldp::TspDecisionInstance back = mldp::import_tsp(text, 14);
  CHECK(back.cities() == 3);
  CHECK(back.budget() == 14);
  for (Client i = 0; i < 3; ++i)
    for (Client j = 0; j < 3; ++j)
      CHECK(back.cost(i, j) == tsp.cost(i, j));
}
