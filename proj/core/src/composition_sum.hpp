#pragma once

// Shared engine for every generating function written as a weighted sum over
// compositions of n of products of binomial factors.

#include <cstdint>
#include <stdexcept>
#include <span>
#include <string>

#include "areawalk/compositions.hpp"
#include "areawalk/parallel.hpp"
#include "dense_poly.hpp"

namespace areawalk::detail {

enum class FactorLayout {
  // parts[i-1] = l_i pairs at level i contribute (Q^{-(2i-1)/2} + Q^{(2i-1)/2})^{2 l_i}.
  half_odd_levels,
  // parts[0] = l_0 contributes 4^{l_0}; parts[i] = l_i contributes (Q^{-i} + Q^{i})^{2 l_i}.
  integer_levels,
};

inline DensePoly factor_product(const Composition& c, FactorLayout layout) {
  DensePoly prod;
  const auto parts = c.parts();
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const auto i = static_cast<std::int64_t>(idx);
    const std::int64_t stride = layout == FactorLayout::half_odd_levels ? 2 * (i + 1) - 1 : 2 * i;
    prod.multiply_binomial_factor(static_cast<unsigned>(parts[idx]), stride);
  }
  return prod;
}

/// Exact integer from a rational prefactor that must be integral.
inline BigInt require_integer(const ExactRational& value, const char* what) {
  if (!value.is_integer()) {
    throw std::logic_error(std::string(what) + ": non-integral prefactor " + value.to_string());
  }
  return value.numerator();
}

/// Sum over compositions of n of weight(c) * factor_product(c). weight
/// returns a BigInt; compositions with weight 0 are skipped.
template <class Weight>
AreaPolynomial composition_sum(int n, FactorLayout layout, unsigned threads, Weight&& weight) {
  const std::uint64_t count = composition_count(n);
  const std::int64_t bound = static_cast<std::int64_t>(n) * n;
  auto partials = parallel_chunks<DenseAccumulator>(
      count, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        DenseAccumulator acc(bound);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const Composition c = composition_from_mask(n, mask);
          const BigInt w = weight(c);
          if (w == 0) continue;
          acc.add(factor_product(c, layout), w);
        }
        return acc;
      });
  DenseAccumulator total(bound);
  for (const auto& part : partials) total.merge(part);
  return total.to_polynomial();
}

struct WeightedLevel {
  int pairs;   // l_r
  int weight;  // exponent step contributed by each unit of k_r
};

/// Literal inner multi-sum of the explicit counting formulas:
///   sum_{k_r = -l_r..l_r} binom(2 l_1, l_1 + sum_r weight_r k_r - target) prod_r binom(2 l_r, l_r + k_r)
inline BigInt inner_binomial_sum(int l1, std::span<const WeightedLevel> levels, std::int64_t target) {
  BigInt total = 0;
  auto recurse = [&](auto&& self, std::size_t r, std::int64_t shift, const BigInt& product) -> void {
    if (r == levels.size()) {
      const BigInt head = binomial(2 * l1, l1 + shift - target);
      if (head != 0) total += head * product;
      return;
    }
    const int l = levels[r].pairs;
    for (int k = -l; k <= l; ++k) {
      self(self, r + 1, shift + static_cast<std::int64_t>(levels[r].weight) * k, product * binomial(2 * l, l + k));
    }
  };
  recurse(recurse, 0, 0, BigInt(1));
  return total;
}

}  // namespace areawalk::detail
