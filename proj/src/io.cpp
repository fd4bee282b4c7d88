#include "mldp/io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "rng.hpp"

namespace mldp {

namespace {

// Instance/matrix dimensions accepted by the text parsers. Keeps a typo in
// a size header from provoking a giant allocation.
constexpr Time kMaxParsedSide = 1000;

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

// Whitespace-separated tokens with 1-based positions; '#' comments run to
// end of line.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::optional<Token> next() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++column_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size())
      return std::nullopt;
    const std::size_t start = pos_;
    const Token head{{}, line_, column_};
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r' || c == '\f' ||
          c == '\v' || c == '#')
        break;
      ++column_;
      ++pos_;
    }
    return Token{text_.substr(start, pos_ - start), head.line, head.column};
  }

  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void parse_fail(const Token& tok, const std::string& message) {
  fail(Status::parse_error, "line " + std::to_string(tok.line) + ", column " +
                                std::to_string(tok.column) + ": " + message);
}

[[noreturn]] void parse_fail_at_line(int line, const std::string& message) {
  fail(Status::parse_error, "line " + std::to_string(line) + ": " + message);
}

Token expect_token(Scanner& in, const std::string& what) {
  auto tok = in.next();
  if (!tok)
    parse_fail_at_line(in.line(), "unexpected end of input, expected " + what);
  return *tok;
}

void expect_keyword(Scanner& in, std::string_view keyword) {
  const Token tok = expect_token(in, "'" + std::string(keyword) + "'");
  if (tok.text != keyword)
    parse_fail(tok, "expected '" + std::string(keyword) + "', got '" +
                        std::string(tok.text) + "'");
}

Time parse_time(const Token& tok, const std::string& what) {
  Time value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    parse_fail(tok, "expected " + what + ", got '" + std::string(tok.text) + "'");
  return value;
}

Time expect_time(Scanner& in, const std::string& what) {
  return parse_time(expect_token(in, what), what);
}

Client expect_side(Scanner& in, const std::string& what) {
  const Token tok = expect_token(in, what);
  const Time value = parse_time(tok, what);
  if (value < 1 || value > kMaxParsedSide)
    parse_fail(tok, what + " must be in 1.." + std::to_string(kMaxParsedSide) +
                        ", got " + std::string(tok.text));
  return static_cast<Client>(value);
}

std::vector<Time> read_square_matrix(Scanner& in, std::size_t side) {
  std::vector<Time> values;
  values.reserve(side * side);
  for (std::size_t k = 0; k < side * side; ++k)
    values.push_back(expect_time(in, "matrix entry"));
  return values;
}

void expect_end(Scanner& in) {
  if (auto tok = in.next())
    parse_fail(*tok, "unexpected trailing '" + std::string(tok->text) + "'");
}

void append_matrix(std::string& out, std::span<const Time> values,
                   std::size_t side) {
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      if (j > 0)
        out += ' ';
      out += std::to_string(values[i * side + j]);
    }
    out += '\n';
  }
}

// Nearest integer, ties to even. Exact-half ties cannot arise from integer
// coordinates, but imported files carry real ones.
Time round_half_even(double v) {
  const double f = std::floor(v);
  const Time base = static_cast<Time>(f);
  const double rest = v - f;
  if (rest > 0.5)
    return base + 1;
  if (rest < 0.5)
    return base;
  return base % 2 == 0 ? base : base + 1;
}

void check_range(Time lo, Time hi, const char* what) {
  if (lo < 0)
    fail(Status::invalid_argument,
         std::string(what) + " range must be non-negative");
  if (lo > hi)
    fail(Status::invalid_argument,
         std::string(what) + " range is empty (min exceeds max)");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, int line, const char* what) {
  double value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    parse_fail_at_line(line, std::string("expected ") + what + ", got '" +
                                 std::string(text) + "'");
  return value;
}

TspDecisionInstance parse_native_tsp(std::string_view text, Time budget) {
  Scanner in(text);
  expect_keyword(in, "tspd");
  expect_keyword(in, "1");
  expect_keyword(in, "m");
  const Client m = expect_side(in, "city count");
  std::vector<Time> costs = read_square_matrix(in, static_cast<std::size_t>(m));
  expect_end(in);
  return TspDecisionInstance::of(m, std::move(costs), budget);
}

// Keyword/value TSP file: "KEY: value" headers, then NODE_COORD_SECTION
// with one "id x y" triple per node, optionally terminated by EOF. Only
// 2D Euclidean weights are supported.
TspDecisionInstance parse_coord_tsp(std::string_view text, Time budget) {
  Time dimension = -1;
  bool euclidean = false;
  bool in_coords = false;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<bool> present;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty())
      continue;
    if (line == "EOF")
      break;

    if (!in_coords) {
      if (line == "NODE_COORD_SECTION") {
        if (dimension < 2)
          parse_fail_at_line(line_no,
                             "NODE_COORD_SECTION needs DIMENSION of at least 2");
        if (!euclidean)
          parse_fail_at_line(line_no,
                             "NODE_COORD_SECTION needs EDGE_WEIGHT_TYPE EUC_2D");
        in_coords = true;
        xs.assign(static_cast<std::size_t>(dimension), 0.0);
        ys.assign(static_cast<std::size_t>(dimension), 0.0);
        present.assign(static_cast<std::size_t>(dimension), false);
        continue;
      }
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        parse_fail_at_line(line_no,
                           "expected 'KEY: value', got '" + std::string(line) + "'");
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      if (key == "DIMENSION") {
        Time parsed = 0;
        const char* first = value.data();
        const char* last = first + value.size();
        const auto [ptr, ec] = std::from_chars(first, last, parsed);
        if (ec != std::errc{} || ptr != last || parsed < 2 ||
            parsed > kMaxParsedSide)
          parse_fail_at_line(line_no, "DIMENSION must be an integer in 2.." +
                                          std::to_string(kMaxParsedSide) +
                                          ", got '" + std::string(value) + "'");
        dimension = parsed;
      } else if (key == "EDGE_WEIGHT_TYPE") {
        if (value != "EUC_2D")
          parse_fail_at_line(line_no, "unsupported edge weight type '" +
                                          std::string(value) + "'");
        euclidean = true;
      } else if (key == "TYPE") {
        if (value != "TSP")
          parse_fail_at_line(line_no,
                             "unsupported type '" + std::string(value) + "'");
      }
      // Other keys (NAME, COMMENT, ...) carry no routing data.
      continue;
    }

    // "id x y" with 1-based ids.
    std::size_t a = line.find_first_of(" \t");
    if (a == std::string_view::npos)
      parse_fail_at_line(line_no, "expected 'id x y' coordinates");
    std::string_view rest = trim(line.substr(a));
    const std::size_t b = rest.find_first_of(" \t");
    if (b == std::string_view::npos)
      parse_fail_at_line(line_no, "expected 'id x y' coordinates");
    const std::string_view id_text = trim(line.substr(0, a));
    const std::string_view x_text = trim(rest.substr(0, b));
    const std::string_view y_text = trim(rest.substr(b));

    Time id = 0;
    {
      const char* first = id_text.data();
      const char* last = first + id_text.size();
      const auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc{} || ptr != last || id < 1 || id > dimension)
        parse_fail_at_line(line_no, "node id must be an integer in 1.." +
                                        std::to_string(dimension) + ", got '" +
                                        std::string(id_text) + "'");
    }
    const std::size_t slot = static_cast<std::size_t>(id - 1);
    if (present[slot])
      parse_fail_at_line(line_no, "duplicate node id " + std::to_string(id));
    present[slot] = true;
    xs[slot] = parse_real(x_text, line_no, "x coordinate");
    ys[slot] = parse_real(y_text, line_no, "y coordinate");
  }

  if (!in_coords)
    parse_fail_at_line(line_no, "missing NODE_COORD_SECTION");
  for (std::size_t i = 0; i < present.size(); ++i)
    if (!present[i])
      parse_fail_at_line(line_no, "missing coordinates for node " +
                                      std::to_string(i + 1));

  const std::size_t m = static_cast<std::size_t>(dimension);
  std::vector<Time> costs(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j)
        continue;
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      costs[i * m + j] = round_half_even(std::sqrt(dx * dx + dy * dy));
    }
  return TspDecisionInstance::of(static_cast<Client>(dimension),
                                 std::move(costs), budget);
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
  case Family::euclidean:
    return "euclidean";
  case Family::asymmetric_uniform:
    return "asymmetric-uniform";
  case Family::constant_travel:
    return "constant-travel";
  case Family::constant_service:
    return "constant-service";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "euclidean")
    return Family::euclidean;
  if (name == "asymmetric-uniform")
    return Family::asymmetric_uniform;
  if (name == "constant-travel")
    return Family::constant_travel;
  if (name == "constant-service")
    return Family::constant_service;
  return std::nullopt;
}

Instance generate(const GeneratorSpec& spec) {
  if (spec.clients < 1)
    fail(Status::invalid_argument, "generator needs at least one client");
  check_range(spec.travel_min, spec.travel_max, "travel");
  check_range(spec.service_min, spec.service_max, "service");
  if (spec.family == Family::constant_travel) {
    if (spec.travel_min != spec.travel_max)
      fail(Status::invalid_argument,
           "constant-travel requires travel_min == travel_max");
    if (spec.service_min != 0 || spec.service_max != 0)
      fail(Status::invalid_argument,
           "constant-travel requires zero service times");
  }
  if (spec.family == Family::constant_service &&
      spec.service_min != spec.service_max)
    fail(Status::invalid_argument,
         "constant-service requires service_min == service_max");

  const Client n = spec.clients;
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  std::vector<Time> t(side * side, 0);
  std::mt19937_64 rng(spec.seed);
  const auto draw = [&rng](Time lo, Time hi) {
    return static_cast<Time>(detail::bounded(rng, static_cast<std::uint64_t>(lo),
                                             static_cast<std::uint64_t>(hi)));
  };

  switch (spec.family) {
  case Family::asymmetric_uniform:
  case Family::constant_service:
    // Row-major pass; a fixed draw order pins the output for a given seed.
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) {
        if (i == j)
          t[i * side + j] =
              i == 0 ? 0
                     : (spec.family == Family::constant_service
                            ? spec.service_min
                            : draw(spec.service_min, spec.service_max));
        else
          t[i * side + j] = draw(spec.travel_min, spec.travel_max);
      }
    break;
  case Family::euclidean: {
    // Integer grid points; coordinates first, then services.
    std::vector<Time> xs(side), ys(side);
    for (std::size_t v = 0; v < side; ++v) {
      xs[v] = draw(spec.travel_min, spec.travel_max);
      ys[v] = draw(spec.travel_min, spec.travel_max);
    }
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) {
        if (i == j)
          continue;
        const double dx = static_cast<double>(xs[i] - xs[j]);
        const double dy = static_cast<double>(ys[i] - ys[j]);
        t[i * side + j] = round_half_even(std::sqrt(dx * dx + dy * dy));
      }
    for (std::size_t i = 1; i < side; ++i)
      t[i * side + i] = draw(spec.service_min, spec.service_max);
    break;
  }
  case Family::constant_travel:
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j)
        if (i != j)
          t[i * side + j] = spec.travel_min;
    break;
  }

  return Instance::from_matrix(n, std::move(t));
}

Instance parse_instance(std::string_view text) {
  Scanner in(text);
  expect_keyword(in, "mldp");
  expect_keyword(in, "1");
  expect_keyword(in, "n");
  const Client n = expect_side(in, "client count");
  std::vector<Time> times =
      read_square_matrix(in, static_cast<std::size_t>(n) + 1);
  expect_end(in);
  return Instance::from_matrix(n, std::move(times));
}

std::string render_instance(const Instance& inst) {
  std::string out = "mldp 1\nn " + std::to_string(inst.clients()) + "\n";
  append_matrix(out, inst.raw(), static_cast<std::size_t>(inst.vertices()));
  return out;
}

DecisionInstance parse_decision_instance(std::string_view text) {
  Scanner in(text);
  expect_keyword(in, "mldpd");
  expect_keyword(in, "1");
  expect_keyword(in, "n");
  const Client n = expect_side(in, "client count");
  expect_keyword(in, "theta");
  const Time theta = expect_time(in, "travel bound");
  expect_keyword(in, "omega");
  const Time omega = expect_time(in, "latency bound");
  std::vector<Time> times =
      read_square_matrix(in, static_cast<std::size_t>(n) + 1);
  expect_end(in);
  return DecisionInstance::of(Instance::from_matrix(n, std::move(times)), theta,
                              omega);
}

std::string render_decision_instance(const DecisionInstance& d) {
  std::string out = "mldpd 1\nn " + std::to_string(d.inst.clients()) +
                    "\ntheta " + std::to_string(d.theta) + "\nomega " +
                    std::to_string(d.omega) + "\n";
  append_matrix(out, d.inst.raw(), static_cast<std::size_t>(d.inst.vertices()));
  return out;
}

TspDecisionInstance import_tsp(std::string_view text, Time budget) {
  Scanner probe(text);
  const auto first = probe.next();
  if (!first)
    fail(Status::parse_error, "empty input");
  if (first->text == "tspd")
    return parse_native_tsp(text, budget);
  return parse_coord_tsp(text, budget);
}

std::string render_tsp(const TspDecisionInstance& tsp) {
  std::string out = "tspd 1\nm " + std::to_string(tsp.cities()) + "\n";
  append_matrix(out, tsp.raw(), static_cast<std::size_t>(tsp.cities()));
  return out;
}

}  // namespace mldp
