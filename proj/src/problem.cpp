#include "tc/problem.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "tc/error.hpp"

namespace tc {

namespace {

[[noreturn]] void fail(ErrorCode code, int line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Drops a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

long parse_int(const std::string& v, int line, const std::string& key) {
  long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) fail(ErrorCode::syntax, line, key + " expects an integer");
  return out;
}

std::string parse_string(const std::string& v, int line, const std::string& key) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') fail(ErrorCode::syntax, line, key + " expects a quoted string");
  std::string body = v.substr(1, v.size() - 2);
  if (body.find('"') != std::string::npos) fail(ErrorCode::syntax, line, "stray quote in " + key);
  return body;
}

std::vector<std::string> parse_list(const std::string& v, int line, const std::string& key) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(ErrorCode::syntax, line, key + " expects a bracketed list");
  std::vector<std::string> out;
  std::size_t i = 1;
  const std::size_t end = v.size() - 1;
  auto skip = [&] {
    while (i < end && std::isspace(static_cast<unsigned char>(v[i]))) ++i;
  };
  skip();
  if (i == end) return out;
  for (;;) {
    skip();
    if (i >= end || v[i] != '"') fail(ErrorCode::syntax, line, key + ": expected a quoted polynomial");
    std::size_t close = v.find('"', i + 1);
    if (close == std::string::npos || close >= end) fail(ErrorCode::syntax, line, key + ": unterminated string");
    out.push_back(v.substr(i + 1, close - i - 1));
    i = close + 1;
    skip();
    if (i == end) break;
    if (v[i] != ',') fail(ErrorCode::syntax, line, key + ": expected ',' between entries");
    ++i;
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const int start_line = line;
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(ErrorCode::syntax, line, "expected key = value");
    std::string key = trim(std::string_view(s).substr(0, eq));
    std::string value = trim(std::string_view(s).substr(eq + 1));
    // lists may continue over several lines
    if (!value.empty() && value.front() == '[') {
      while (value.back() != ']') {
        if (!std::getline(in, raw)) fail(ErrorCode::syntax, start_line, "unterminated list");
        ++line;
        value += " " + trim(strip_comment(raw));
        value = trim(value);
      }
    }
    if (value.empty()) fail(ErrorCode::syntax, start_line, "missing value for " + key);
    if (!seen.insert(key).second) fail(ErrorCode::syntax, start_line, "duplicate key " + key);
    if (key == "char") {
      pf.characteristic = parse_int(value, start_line, key);
    } else if (key == "ext_degree") {
      pf.ext_degree = static_cast<int>(parse_int(value, start_line, key));
    } else if (key == "cubic") {
      pf.cubic = parse_string(value, start_line, key);
    } else if (key == "generators") {
      pf.generators = parse_list(value, start_line, key);
    } else if (key == "candidate") {
      pf.candidate = parse_string(value, start_line, key);
    } else if (key == "e_max") {
      long e = parse_int(value, start_line, key);
      if (e < 0 || e > 16) fail(ErrorCode::syntax, start_line, "e_max must lie in [0, 16]");
      pf.e_max = static_cast<int>(e);
    } else {
      fail(ErrorCode::syntax, start_line, "unknown key " + key);
    }
  }
  for (const char* k : {"char", "cubic", "generators"})
    if (!seen.count(k)) throw Error(ErrorCode::missing_field, std::string("missing field ") + k);
  return pf;
}

Problem build_problem(const ProblemFile& file) {
  if (file.characteristic < 2 || file.characteristic > 0xffff || !is_prime(static_cast<std::uint64_t>(file.characteristic)))
    throw Error(ErrorCode::bad_char, "char must be a prime below 2^16, got " + std::to_string(file.characteristic));
  FieldPtr field = make_field(static_cast<std::uint32_t>(file.characteristic), file.ext_degree);
  CubicCurve curve = make_curve(parse_polynomial(field, file.cubic));
  std::vector<Polynomial> gens;
  for (const auto& g : file.generators) gens.push_back(parse_polynomial(field, g));
  IdealData ideal = make_ideal(curve, std::move(gens));
  std::optional<Polynomial> candidate;
  if (file.candidate) {
    Polynomial c = parse_polynomial(field, *file.candidate);
    if (!c.is_zero() && !c.is_homogeneous()) throw Error(ErrorCode::bad_candidate, "candidate is not homogeneous");
    candidate = std::move(c);
  }
  return Problem{field, std::move(curve), std::move(ideal), std::move(candidate), file.e_max.value_or(4)};
}

}  // namespace tc
