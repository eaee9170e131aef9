#pragma once

#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

#include "areawalk/laurent.hpp"

namespace areawalk {

/// Ordered tuple of positive integers (l_1, ..., l_j) summing to total().
///
/// In the trace expansion l_i is the number of transitions between index
/// levels i-1 and i of a periodic index path.
class Composition {
 public:
  /// Throws std::invalid_argument if parts is empty or contains a part < 1.
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const { return total_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Part at 1-based level i; 0 outside 1..size().
  int level(int i) const {
    return (i >= 1 && static_cast<std::size_t>(i) <= parts_.size()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Largest n accepted by the mask-based composition stream.
inline constexpr int kMaxCompositionTotal = 62;

/// Number of compositions of n, 2^(n-1).
std::uint64_t composition_count(int n);

/// Decodes one of the 2^(n-1) separator masks. Bit b of mask places a cut
/// b+1 units from the right end, so mask 0 is (n), mask 1 is (n-1, 1) and the
/// all-ones mask is (1, ..., 1).
Composition composition_from_mask(int n, std::uint64_t mask);

/// Lazily yields every composition of n exactly once, in mask order.
/// Throws std::invalid_argument for n < 1 or n > kMaxCompositionTotal.
inline auto compositions(int n) {
  const std::uint64_t count = composition_count(n);
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([n](std::uint64_t mask) { return composition_from_mask(n, mask); });
}

/// binom(n, k) with the convention that any out-of-range argument gives 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// c(l_1..l_j) = (1/l_1) prod_{i<j} binom(l_i + l_{i+1} - 1, l_{i+1}).
ExactRational cluster_coeff(const Composition& c);

/// Same value from the mirrored product (1/l_j) prod binom(l_i + l_{i+1} - 1, l_i).
ExactRational cluster_coeff_alt(const Composition& c);

/// c(2 l0 - 1, rest...), the weight of index paths that creep along the top
/// level 2 l0 - 1 times. rest may be empty.
ExactRational cluster_coeff_bar(int l0, std::span<const int> rest);

}  // namespace areawalk
