#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace areawalk::cli {

namespace {

std::string power(std::int64_t t) {
  if (t == 0) return "";
  if (t == 1) return "Q";
  return "Q^" + std::to_string(t);
}

// Coefficient in front of a non-constant factor; 1 and -1 lose their digit.
std::string coefficient_prefix(const BigInt& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return c.get_str();
}

void append(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string render_pretty(const AreaPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  if (p.is_palindromic()) {
    const BigInt c0 = p.coefficient(0);
    if (c0 != 0) append(out, c0.get_str());
    for (const auto& [t, c] : p.terms()) {
      if (t <= 0) continue;
      append(out, coefficient_prefix(c) + "(" + power(-t) + "+" + power(t) + ")");
    }
    return out;
  }
  for (const auto& [t, c] : p.terms()) {
    append(out, t == 0 ? c.get_str() : coefficient_prefix(c) + power(t));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_ps_list(const std::string& text) {
  // A bare "p,s" (no colon, exactly one comma) names a single pair.
  if (text.find(':') == std::string::npos && std::count(text.begin(), text.end(), ',') == 1) {
    return parse_ps_list(text.substr(0, text.find(',')) + ":" + text.substr(text.find(',') + 1));
  }
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--ps expects p:s pairs, got '" + item + "'");
    int p = 0, s = 0;
    const auto parse_int = [&](std::string_view part, int& value) {
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (ec != std::errc() || ptr != part.data() + part.size()) {
        throw UsageError("--ps: bad integer '" + std::string(part) + "'");
      }
    };
    const std::string_view view(item);
    parse_int(view.substr(0, colon), p);
    parse_int(view.substr(colon + 1), s);
    out.emplace_back(p, s);
  }
  if (out.empty()) throw UsageError("--ps: empty list");
  return out;
}

unsigned threads_from_env() {
  const char* value = std::getenv("AREAWALK_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  unsigned n = 0;
  const std::string_view text(value);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("AREAWALK_THREADS must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return n;
}

}  // namespace areawalk::cli
