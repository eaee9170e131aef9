#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "areawalk/laurent.hpp"

namespace areawalk {

/// Unit steps +x, -x, +y, -y. The numeric values fix the lexicographic walk
/// order R < L < U < D used by the brute-force sweep.
enum class Step : std::uint8_t { R = 0, L = 1, U = 2, D = 3 };

class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a string over "RLUD". Throws std::invalid_argument on any other character.
  static Walk parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  std::string to_string() const;

 private:
  std::vector<Step> steps_;
};

/// Twice the algebraic area of the walk closed by the straight chord from
/// its endpoint back to the origin (counterclockwise positive).
std::int64_t radial_double_area(const Walk& walk);

struct Endpoint {
  int k = 0;
  int l = 0;
  auto operator<=>(const Endpoint&) const = default;
};

/// Exact area polynomial of the walks reaching each endpoint.
class EndpointHistogram {
 public:
  using Map = std::map<Endpoint, AreaPolynomial>;

  EndpointHistogram() = default;
  EndpointHistogram(int length, Map by_endpoint) : length_(length), by_endpoint_(std::move(by_endpoint)) {}

  int length() const { return length_; }
  const Map& by_endpoint() const { return by_endpoint_; }

  /// Sum over all endpoints.
  AreaPolynomial total() const;

  friend bool operator==(const EndpointHistogram&, const EndpointHistogram&) = default;

 private:
  int length_ = 0;
  Map by_endpoint_;
};

inline constexpr int kDefaultBruteCap = 14;
inline constexpr int kDefaultDpCap = 40;
/// Hard limits independent of the configurable caps: the brute-force sweep
/// keeps 64-bit counters, the DP keeps 128-bit counters (4^63 < 2^127).
inline constexpr int kMaxBruteSteps = 24;
inline constexpr int kMaxDpSteps = 63;

/// Visits all 4^n_steps walks. Throws std::invalid_argument when
/// n_steps < 1 or n_steps exceeds cap.
EndpointHistogram brute_force(int n_steps, int cap = kDefaultBruteCap, unsigned threads = 0);

/// Position-resolved transfer DP. The area increment of a step depends only
/// on the current position: R adds -y, L adds y, U adds x, D adds -x.
EndpointHistogram dp_enumerate(int n_steps, int cap = kDefaultDpCap, unsigned threads = 0);

/// Sum of the polynomials at endpoints with k + l = c.
AreaPolynomial line_gf(const EndpointHistogram& h, std::int64_t c);

/// Sum of the polynomials at endpoints with k - l = c.
AreaPolynomial antiline_gf(const EndpointHistogram& h, std::int64_t c);

/// Polynomial at (k, l), or empty if no walk ends there.
AreaPolynomial endpoint_gf(const EndpointHistogram& h, int k, int l);

}  // namespace areawalk
