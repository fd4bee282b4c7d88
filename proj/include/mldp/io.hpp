#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mldp/instance.hpp"
#include "mldp/reduce.hpp"
#include "mldp/verify.hpp"

namespace mldp {

/// Instance families mirroring the structural special cases: constant
/// travel (trivial), constant service (a plain TSP), and the general
/// arbitrary-times cases, symmetric and not.
enum class Family {
  euclidean = 0,
  asymmetric_uniform = 1,
  constant_travel = 2,
  constant_service = 3,
};

const char* to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Identical specs generate byte-identical instances: the generator uses a
/// fixed PRNG and a portable bounded sampler, never the implementation-
/// defined standard distributions.
struct GeneratorSpec {
  Family family = Family::asymmetric_uniform;
  Client clients = 1;
  std::uint64_t seed = 0;
  /// Travel-time range. euclidean draws integer coordinates from this range
  /// instead; constant_travel requires travel_min == travel_max and uses it
  /// as the constant.
  Time travel_min = 1;
  Time travel_max = 100;
  /// Service-time range. constant_travel requires [0, 0]; constant_service
  /// requires service_min == service_max and uses it as the constant.
  Time service_min = 0;
  Time service_max = 0;
};

Instance generate(const GeneratorSpec& spec);

/// Native plain-text instance format:
///
///   mldp 1
///   n 2
///   0 2 0
///   0 1 3
///   4 0 5
///
/// A version header, the client count, and n+1 rows of n+1 integers
/// (diagonal entries are service times). '#' starts a comment, blank lines
/// are ignored. Parse errors carry line/column positions; render produces
/// the canonical form, and parse(render(x)) == x for every valid instance.
Instance parse_instance(std::string_view text);
std::string render_instance(const Instance& inst);

/// Decision-instance format: like the instance format with magic "mldpd"
/// and "theta <bound>" / "omega <bound>" lines between the header and the
/// matrix.
DecisionInstance parse_decision_instance(std::string_view text);
std::string render_decision_instance(const DecisionInstance& d);

/// Reads a TSP cost matrix from either the native "tspd" matrix format or a
/// node-coordinate TSP file (2D Euclidean; distances rounded to the nearest
/// integer, ties to even). The tour budget is not part of either file and
/// is supplied by the caller. Unsupported edge-weight types are rejected by
/// name.
TspDecisionInstance import_tsp(std::string_view text, Time budget);
std::string render_tsp(const TspDecisionInstance& tsp);

}  // namespace mldp
