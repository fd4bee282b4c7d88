// Command-line front end. Talks to the solver library exclusively through
// the C API in mldp.h.
//
// Exit codes: 0 for success and "yes" verdicts, 1 for "no"/infeasible
// verdicts, 2 for usage, parse, and runtime errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mldp.h"

namespace {

using nlohmann::json;

struct CliError {
  int code = 2;
  std::string message;
};

[[noreturn]] void die(std::string message, int code = 2) {
  throw CliError{code, std::move(message)};
}

void check(mldp_status status) {
  if (status != MLDP_OK)
    die(std::string(mldp_status_name(status)) + ": " + mldp_last_error());
}

struct InstanceHandle {
  mldp_instance* ptr = nullptr;
  InstanceHandle() = default;
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;
  ~InstanceHandle() { mldp_instance_free(ptr); }
};

struct TspHandle {
  mldp_tsp* ptr = nullptr;
  TspHandle() = default;
  TspHandle(const TspHandle&) = delete;
  TspHandle& operator=(const TspHandle&) = delete;
  ~TspHandle() { mldp_tsp_free(ptr); }
};

struct FrontHandle {
  mldp_front* ptr = nullptr;
  FrontHandle() = default;
  FrontHandle(const FrontHandle&) = delete;
  FrontHandle& operator=(const FrontHandle&) = delete;
  ~FrontHandle() { mldp_front_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  StringHandle() = default;
  StringHandle(const StringHandle&) = delete;
  StringHandle& operator=(const StringHandle&) = delete;
  ~StringHandle() { mldp_string_free(ptr); }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file)
    die("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::vector<int32_t> parse_route(const std::string& text) {
  std::vector<int32_t> route;
  if (text.empty())
    return route;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size() || value < INT32_MIN || value > INT32_MAX)
        throw std::invalid_argument(item);
      route.push_back(static_cast<int32_t>(value));
    } catch (const std::exception&) {
      die("invalid route entry '" + item + "' (expected comma-separated integers)");
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return route;
}

// "p/q", a decimal like "0.25", or a bare integer; returned as an exact
// rational.
std::pair<int64_t, int64_t> parse_weight(const std::string& text) {
  const auto bad = [&]() {
    die("invalid weight '" + text + "' (expected p/q, a decimal, or an integer)");
  };
  const std::size_t slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const int64_t num = std::stoll(text.substr(0, slash), &used);
      if (used != slash)
        bad();
      const std::string den_text = text.substr(slash + 1);
      const int64_t den = std::stoll(den_text, &used);
      if (used != den_text.size())
        bad();
      return {num, den};
    }
    const std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 18)
        bad();
      std::size_t used = 0;
      const int64_t w = whole.empty() ? 0 : std::stoll(whole, &used);
      if (!whole.empty() && used != whole.size())
        bad();
      const int64_t f = std::stoll(frac, &used);
      if (used != frac.size() || f < 0)
        bad();
      int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i)
        den *= 10;
      return {w * den + f, den};
    }
    std::size_t used = 0;
    const int64_t w = std::stoll(text, &used);
    if (used != text.size())
      bad();
    return {w, 1};
  } catch (const CliError&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return {0, 1};
}

std::string join_route(const std::vector<int32_t>& route, char sep) {
  std::string out;
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (i > 0)
      out += sep;
    out += std::to_string(route[i]);
  }
  return out;
}

enum class Format { text, csv, json_fmt };

Format parse_format(const std::string& name) {
  if (name == "text")
    return Format::text;
  if (name == "csv")
    return Format::csv;
  if (name == "json")
    return Format::json_fmt;
  die("unknown format '" + name + "' (expected text, csv, or json)");
}

void emit(const std::string& body) { std::fputs(body.c_str(), stdout); }

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

// Loads either a plain instance or, when the file magic is "mldpd", a
// decision instance whose bounds fill theta/omega unless flags already did.
void load_instance_maybe_decision(const std::string& text, InstanceHandle& inst,
                                  std::optional<int64_t>& theta,
                                  std::optional<int64_t>& omega) {
  std::size_t at = 0;
  while (at < text.size() &&
         (text[at] == ' ' || text[at] == '\t' || text[at] == '\n' ||
          text[at] == '\r'))
    ++at;
  const bool decision = text.compare(at, 6, "mldpd ") == 0 ||
                        text.compare(at, 6, "mldpd\t") == 0 ||
                        text.compare(at, 6, "mldpd\n") == 0;
  if (decision) {
    int64_t t = 0;
    int64_t o = 0;
    check(mldp_decision_parse(text.c_str(), &inst.ptr, &t, &o));
    if (!theta)
      theta = t;
    if (!omega)
      omega = o;
    return;
  }
  check(mldp_instance_parse(text.c_str(), &inst.ptr));
}

mldp_solve_options make_options(const std::string& method, int jobs,
                                std::optional<int32_t> limit_n) {
  mldp_solve_options opts;
  mldp_solve_options_init(&opts);
  if (method == "brute")
    opts.method = MLDP_METHOD_BRUTE_FORCE;
  else if (method == "dp")
    opts.method = MLDP_METHOD_DP;
  else
    die("unknown method '" + method + "' (expected brute or dp)");
  opts.jobs = jobs;
  if (limit_n) {
    opts.brute_force_limit = *limit_n;
    opts.dp_limit = *limit_n;
  }
  return opts;
}

json front_to_json_points(const mldp_front* front) {
  json points = json::array();
  const int32_t n = mldp_front_clients(front);
  std::vector<int32_t> route(static_cast<std::size_t>(n));
  for (int32_t i = 0; i < mldp_front_size(front); ++i) {
    int64_t travel = 0;
    int64_t latency = 0;
    check(mldp_front_point(front, i, &travel, &latency));
    check(mldp_front_witness(front, i, route.data(), n));
    points.push_back(json{{"travel", travel},
                          {"latency", latency},
                          {"route", route}});
  }
  return points;
}

// ---- subcommand settings --------------------------------------------

struct GenArgs {
  std::string family = "asymmetric-uniform";
  int32_t clients = 0;
  uint64_t seed = 0;
  int64_t travel_min = 1;
  int64_t travel_max = 100;
  int64_t service_min = 0;
  int64_t service_max = 0;
  std::string format = "text";
};

struct EvalArgs {
  std::string file;
  std::string route;
  bool timeline = false;
  std::string format = "text";
};

struct VerifyArgs {
  std::string file;
  std::string route;
  std::optional<int64_t> theta;
  std::optional<int64_t> omega;
  std::string format = "text";
};

struct ReduceArgs {
  std::string file;
  int64_t budget = 0;
  std::string format = "text";
};

struct DecideArgs {
  std::string file;
  std::optional<int64_t> theta;
  std::optional<int64_t> omega;
  std::string method = "dp";
  int jobs = 1;
  std::optional<int32_t> limit_n;
  std::string format = "text";
};

struct SolveArgs {
  std::string file;
  std::string method = "dp";
  std::string weight = "1/2";
  uint64_t seed = 0;
  int jobs = 1;
  std::optional<int32_t> limit_n;
  std::string format = "text";
};

struct BenchArgs {
  std::string file;
  std::string family = "asymmetric-uniform";
  int32_t clients = 0;
  uint64_t seed = 0;
  std::string method = "dp";
  int jobs = 1;
  std::optional<int32_t> limit_n;
  std::string format = "text";
};

int run_gen(const GenArgs& a) {
  const Format format = parse_format(a.format);
  mldp_generator_spec spec{};
  const char* names[] = {"euclidean", "asymmetric-uniform", "constant-travel",
                         "constant-service"};
  int32_t family = -1;
  for (int32_t i = 0; i < 4; ++i)
    if (a.family == names[i])
      family = i;
  if (family < 0)
    die("unknown family '" + a.family + "'");
  spec.family = family;
  spec.clients = a.clients;
  spec.seed = a.seed;
  spec.travel_min = a.travel_min;
  spec.travel_max = a.travel_max;
  spec.service_min = a.service_min;
  spec.service_max = a.service_max;

  InstanceHandle inst;
  check(mldp_instance_generate(&spec, &inst.ptr));
  const int32_t n = mldp_instance_clients(inst.ptr);

  if (format == Format::text) {
    StringHandle text;
    check(mldp_instance_render(inst.ptr, &text.ptr));
    emit(text.ptr);
    return 0;
  }
  std::vector<std::vector<int64_t>> matrix(static_cast<std::size_t>(n) + 1);
  for (int32_t i = 0; i <= n; ++i) {
    matrix[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n) + 1);
    for (int32_t j = 0; j <= n; ++j)
      check(mldp_instance_time(inst.ptr, i, j,
                               &matrix[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)]));
  }
  if (format == Format::json_fmt) {
    emit_json(json{{"n", n}, {"matrix", matrix}});
    return 0;
  }
  std::string out;
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0)
        out += ',';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  emit(out);
  return 0;
}

int run_eval(const EvalArgs& a) {
  const Format format = parse_format(a.format);
  InstanceHandle inst;
  const std::string text = read_input(a.file);
  check(mldp_instance_parse(text.c_str(), &inst.ptr));
  const std::vector<int32_t> route = parse_route(a.route);
  int64_t travel = 0;
  int64_t latency = 0;
  const auto call = a.timeline ? mldp_simulate_timeline : mldp_evaluate;
  check(call(inst.ptr, route.data(), static_cast<int32_t>(route.size()), &travel,
             &latency));
  switch (format) {
  case Format::text:
    emit("travel=" + std::to_string(travel) + " latency=" +
         std::to_string(latency) + "\n");
    break;
  case Format::csv:
    emit("travel,latency\n" + std::to_string(travel) + "," +
         std::to_string(latency) + "\n");
    break;
  case Format::json_fmt:
    emit_json(json{{"travel", travel}, {"latency", latency}, {"route", route}});
    break;
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  const Format format = parse_format(a.format);
  InstanceHandle inst;
  std::optional<int64_t> theta = a.theta;
  std::optional<int64_t> omega = a.omega;
  load_instance_maybe_decision(read_input(a.file), inst, theta, omega);
  if (!theta || !omega)
    die("verify needs --theta and --omega (or a decision-instance file)");
  const std::vector<int32_t> route = parse_route(a.route);
  mldp_verdict verdict{};
  check(mldp_verify(inst.ptr, *theta, *omega, route.data(),
                    static_cast<int32_t>(route.size()), &verdict));
  const char* reason =
      mldp_verdict_reason_name(static_cast<mldp_verdict_reason>(verdict.reason));
  switch (format) {
  case Format::text: {
    std::string line = verdict.feasible ? "OK" : "INFEASIBLE";
    if (!verdict.feasible)
      line += std::string(" reason=") + reason;
    if (verdict.has_observed)
      line += " travel=" + std::to_string(verdict.travel) +
              " latency=" + std::to_string(verdict.latency);
    emit(line + "\n");
    break;
  }
  case Format::csv: {
    std::string row = std::string(verdict.feasible ? "1" : "0") + "," + reason;
    if (verdict.has_observed)
      row += "," + std::to_string(verdict.travel) + "," +
             std::to_string(verdict.latency);
    else
      row += ",,";
    emit("feasible,reason,travel,latency\n" + row + "\n");
    break;
  }
  case Format::json_fmt: {
    json j{{"feasible", verdict.feasible != 0}, {"reason", reason}};
    if (verdict.has_observed) {
      j["travel"] = verdict.travel;
      j["latency"] = verdict.latency;
    }
    emit_json(j);
    break;
  }
  }
  return verdict.feasible ? 0 : 1;
}

int run_reduce(const ReduceArgs& a) {
  const Format format = parse_format(a.format);
  TspHandle tsp;
  const std::string text = read_input(a.file);
  check(mldp_tsp_parse(text.c_str(), a.budget, &tsp.ptr));
  InstanceHandle inst;
  int64_t theta = 0;
  int64_t omega = 0;
  check(mldp_reduce(tsp.ptr, &inst.ptr, &theta, &omega));
  if (format == Format::text) {
    StringHandle rendered;
    check(mldp_decision_render(inst.ptr, theta, omega, &rendered.ptr));
    emit(rendered.ptr);
    return 0;
  }
  if (format == Format::csv)
    die("reduce emits a decision instance; use --format text or json");
  const int32_t n = mldp_instance_clients(inst.ptr);
  std::vector<std::vector<int64_t>> matrix(static_cast<std::size_t>(n) + 1);
  for (int32_t i = 0; i <= n; ++i) {
    matrix[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n) + 1);
    for (int32_t j = 0; j <= n; ++j)
      check(mldp_instance_time(inst.ptr, i, j,
                               &matrix[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)]));
  }
  emit_json(json{{"n", n}, {"theta", theta}, {"omega", omega},
                 {"matrix", matrix}});
  return 0;
}

int run_decide(const DecideArgs& a) {
  const Format format = parse_format(a.format);
  InstanceHandle inst;
  std::optional<int64_t> theta = a.theta;
  std::optional<int64_t> omega = a.omega;
  load_instance_maybe_decision(read_input(a.file), inst, theta, omega);
  if (!theta || !omega)
    die("decide needs --theta and --omega (or a decision-instance file)");
  const mldp_solve_options opts = make_options(a.method, a.jobs, a.limit_n);
  const int32_t n = mldp_instance_clients(inst.ptr);
  std::vector<int32_t> witness(static_cast<std::size_t>(n));
  int32_t feasible = 0;
  check(mldp_decide(inst.ptr, *theta, *omega, &opts, &feasible, witness.data(),
                    n));
  int64_t travel = 0;
  int64_t latency = 0;
  if (feasible)
    check(mldp_evaluate(inst.ptr, witness.data(), n, &travel, &latency));
  switch (format) {
  case Format::text:
    if (feasible)
      emit("YES travel=" + std::to_string(travel) + " latency=" +
           std::to_string(latency) + " route=" + join_route(witness, ',') + "\n");
    else
      emit("NO\n");
    break;
  case Format::csv:
    emit("feasible,travel,latency,route\n");
    if (feasible)
      emit("1," + std::to_string(travel) + "," + std::to_string(latency) + "," +
           join_route(witness, ' ') + "\n");
    else
      emit("0,,,\n");
    break;
  case Format::json_fmt: {
    json j{{"feasible", feasible != 0}};
    if (feasible) {
      j["travel"] = travel;
      j["latency"] = latency;
      j["route"] = witness;
    }
    emit_json(j);
    break;
  }
  }
  return feasible ? 0 : 1;
}

int run_solve(const SolveArgs& a) {
  const Format format = parse_format(a.format);
  InstanceHandle inst;
  const std::string text = read_input(a.file);
  check(mldp_instance_parse(text.c_str(), &inst.ptr));
  const int32_t n = mldp_instance_clients(inst.ptr);

  if (a.method == "ls") {
    const auto [num, den] = parse_weight(a.weight);
    std::vector<int32_t> route(static_cast<std::size_t>(n));
    int64_t travel = 0;
    int64_t latency = 0;
    check(mldp_local_search(inst.ptr, num, den, a.seed, route.data(), n, &travel,
                            &latency));
    switch (format) {
    case Format::text:
      emit("travel=" + std::to_string(travel) + " latency=" +
           std::to_string(latency) + " route=" + join_route(route, ',') + "\n");
      break;
    case Format::csv:
      emit("travel,latency,route\n" + std::to_string(travel) + "," +
           std::to_string(latency) + "," + join_route(route, ' ') + "\n");
      break;
    case Format::json_fmt:
      emit_json(json{{"method", "ls"},
                     {"weight", json{{"num", num}, {"den", den}}},
                     {"travel", travel},
                     {"latency", latency},
                     {"route", route}});
      break;
    }
    return 0;
  }

  const mldp_solve_options opts = make_options(a.method, a.jobs, a.limit_n);
  FrontHandle front;
  check(mldp_solve(inst.ptr, &opts, &front.ptr));
  const int32_t size = mldp_front_size(front.ptr);
  std::vector<int32_t> route(static_cast<std::size_t>(n));

  switch (format) {
  case Format::text: {
    std::string out = "front size " + std::to_string(size) + "\n";
    for (int32_t i = 0; i < size; ++i) {
      int64_t travel = 0;
      int64_t latency = 0;
      check(mldp_front_point(front.ptr, i, &travel, &latency));
      check(mldp_front_witness(front.ptr, i, route.data(), n));
      out += "travel=" + std::to_string(travel) + " latency=" +
             std::to_string(latency) + " route=" + join_route(route, ',') + "\n";
    }
    emit(out);
    break;
  }
  case Format::csv: {
    std::string out = "travel,latency,route\n";
    for (int32_t i = 0; i < size; ++i) {
      int64_t travel = 0;
      int64_t latency = 0;
      check(mldp_front_point(front.ptr, i, &travel, &latency));
      check(mldp_front_witness(front.ptr, i, route.data(), n));
      out += std::to_string(travel) + "," + std::to_string(latency) + "," +
             join_route(route, ' ') + "\n";
    }
    emit(out);
    break;
  }
  case Format::json_fmt:
    emit_json(json{{"method", a.method},
                   {"n", n},
                   {"points", front_to_json_points(front.ptr)}});
    break;
  }
  return 0;
}

int run_bench(const BenchArgs& a) {
  const Format format = parse_format(a.format);
  InstanceHandle inst;
  if (!a.file.empty()) {
    const std::string text = read_input(a.file);
    check(mldp_instance_parse(text.c_str(), &inst.ptr));
  } else {
    if (a.clients < 1)
      die("bench needs an instance file or --clients to generate one");
    mldp_generator_spec spec{};
    const char* names[] = {"euclidean", "asymmetric-uniform", "constant-travel",
                           "constant-service"};
    int32_t family = -1;
    for (int32_t i = 0; i < 4; ++i)
      if (a.family == names[i])
        family = i;
    if (family < 0)
      die("unknown family '" + a.family + "'");
    spec.family = family;
    spec.clients = a.clients;
    spec.seed = a.seed;
    spec.travel_min = 1;
    spec.travel_max = 100;
    spec.service_min = 0;
    spec.service_max = 0;
    check(mldp_instance_generate(&spec, &inst.ptr));
  }
  const int32_t n = mldp_instance_clients(inst.ptr);
  const mldp_solve_options opts = make_options(a.method, a.jobs, a.limit_n);

  const auto start = std::chrono::steady_clock::now();
  FrontHandle front;
  check(mldp_solve(inst.ptr, &opts, &front.ptr));
  const auto stop = std::chrono::steady_clock::now();
  const int64_t wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();

  mldp_solve_stats stats{};
  check(mldp_front_stats(front.ptr, &stats));
  const int32_t points = mldp_front_size(front.ptr);

  switch (format) {
  case Format::text:
    emit("method=" + a.method + " n=" + std::to_string(n) + " jobs=" +
         std::to_string(a.jobs) + " points=" + std::to_string(points) +
         " routes_enumerated=" + std::to_string(stats.routes_enumerated) +
         " labels_generated=" + std::to_string(stats.labels_generated) +
         " labels_kept=" + std::to_string(stats.labels_kept) + " wall_ms=" +
         std::to_string(wall_ms) + "\n");
    break;
  case Format::csv:
    emit("method,n,jobs,points,routes_enumerated,labels_generated,labels_kept,"
         "wall_ms\n" +
         a.method + "," + std::to_string(n) + "," + std::to_string(a.jobs) +
         "," + std::to_string(points) + "," +
         std::to_string(stats.routes_enumerated) + "," +
         std::to_string(stats.labels_generated) + "," +
         std::to_string(stats.labels_kept) + "," + std::to_string(wall_ms) +
         "\n");
    break;
  case Format::json_fmt:
    emit_json(json{{"method", a.method},
                   {"n", n},
                   {"jobs", a.jobs},
                   {"points", points},
                   {"routes_enumerated", stats.routes_enumerated},
                   {"labels_generated", stats.labels_generated},
                   {"labels_kept", stats.labels_kept},
                   {"wall_ms", wall_ms}});
    break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-objective minimum latency-distance routing toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--family", gen.family,
                      "euclidean | asymmetric-uniform | constant-travel | "
                      "constant-service");
  gen_cmd->add_option("-n,--clients", gen.clients, "client count")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--travel-min", gen.travel_min, "minimum travel time");
  gen_cmd->add_option("--travel-max", gen.travel_max, "maximum travel time");
  gen_cmd->add_option("--service-min", gen.service_min, "minimum service time");
  gen_cmd->add_option("--service-max", gen.service_max, "maximum service time");
  gen_cmd->add_option("--format", gen.format, "text | csv | json");

  EvalArgs eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate both objectives of a route");
  eval_cmd->add_option("file", eval.file, "instance file ('-' for stdin)")
      ->required();
  eval_cmd->add_option("--route", eval.route, "comma-separated client order")
      ->required();
  eval_cmd->add_flag("--timeline", eval.timeline,
                     "use the accumulator walk instead of the weighted sum");
  eval_cmd->add_option("--format", eval.format, "text | csv | json");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a candidate against both bounds");
  verify_cmd->add_option("file", verify.file,
                         "instance or decision file ('-' for stdin)")
      ->required();
  verify_cmd->add_option("--route", verify.route,
                         "comma-separated candidate (may be invalid)");
  verify_cmd->add_option("--theta", verify.theta, "travel bound");
  verify_cmd->add_option("--omega", verify.omega, "latency bound");
  verify_cmd->add_option("--format", verify.format, "text | csv | json");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "transform a budgeted TSP into a decision instance");
  reduce_cmd->add_option("file", reduce.file, "TSP file ('-' for stdin)")
      ->required();
  reduce_cmd->add_option("--budget", reduce.budget, "tour cost bound")
      ->required();
  reduce_cmd->add_option("--format", reduce.format, "text | json");

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand(
      "decide", "answer whether a route satisfying both bounds exists");
  decide_cmd->add_option("file", decide.file,
                         "instance or decision file ('-' for stdin)")
      ->required();
  decide_cmd->add_option("--theta", decide.theta, "travel bound");
  decide_cmd->add_option("--omega", decide.omega, "latency bound");
  decide_cmd->add_option("--method", decide.method, "brute | dp");
  decide_cmd->add_option("--jobs", decide.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  decide_cmd->add_option("--limit-n", decide.limit_n,
                         "override the method's client-count limit");
  decide_cmd->add_option("--format", decide.format, "text | csv | json");

  SolveArgs solve;
  auto* solve_cmd =
      app.add_subcommand("solve", "compute the Pareto front (or run ls)");
  solve_cmd->add_option("file", solve.file, "instance file ('-' for stdin)")
      ->required();
  solve_cmd->add_option("--method", solve.method, "brute | dp | ls");
  solve_cmd->add_option("--weight", solve.weight,
                        "ls scalarization weight on travel (p/q or decimal)");
  solve_cmd->add_option("--seed", solve.seed, "ls start-permutation seed");
  solve_cmd->add_option("--jobs", solve.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--limit-n", solve.limit_n,
                        "override the method's client-count limit");
  solve_cmd->add_option("--format", solve.format, "text | csv | json");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "time a solve and report search statistics");
  bench_cmd->add_option("file", bench.file, "instance file (optional)");
  bench_cmd->add_option("--family", bench.family, "generator family");
  bench_cmd->add_option("-n,--clients", bench.clients,
                        "generate an instance of this size");
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--method", bench.method, "brute | dp");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--limit-n", bench.limit_n,
                        "override the method's client-count limit");
  bench_cmd->add_option("--format", bench.format, "text | csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (gen_cmd->parsed())
      return run_gen(gen);
    if (eval_cmd->parsed())
      return run_eval(eval);
    if (verify_cmd->parsed())
      return run_verify(verify);
    if (reduce_cmd->parsed())
      return run_reduce(reduce);
    if (decide_cmd->parsed())
      return run_decide(decide);
    if (solve_cmd->parsed())
      return run_solve(solve);
    if (bench_cmd->parsed())
      return run_bench(bench);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
