#include "areawalk/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace areawalk {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  if (std::ranges::any_of(parts_, [](int l) { return l < 1; })) {
    throw std::invalid_argument("composition parts must be >= 1");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::uint64_t composition_count(int n) {
  if (n < 1) throw std::invalid_argument("compositions require n >= 1, got " + std::to_string(n));
  if (n > kMaxCompositionTotal) {
    throw std::invalid_argument("compositions limited to n <= " + std::to_string(kMaxCompositionTotal));
  }
  return std::uint64_t{1} << (n - 1);
}

Composition composition_from_mask(int n, std::uint64_t mask) {
  if (mask >= composition_count(n)) throw std::out_of_range("composition mask out of range");
  std::vector<int> parts;
  int run = 1;
  // Walk the n-1 gaps from the left; gap g (1-based from the left) is bit n-1-g.
  for (int g = 1; g < n; ++g) {
    const int bit = n - 1 - g;
    if ((mask >> bit) & 1u) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt out = 0;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ExactRational cluster_coeff(const Composition& c) {
  const auto l = c.parts();
  BigInt num = 1;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) num *= binomial(l[i] + l[i + 1] - 1, l[i + 1]);
  return ExactRational(num, l.front());
}

ExactRational cluster_coeff_alt(const Composition& c) {
  const auto l = c.parts();
  BigInt num = 1;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) num *= binomial(l[i] + l[i + 1] - 1, l[i]);
  return ExactRational(num, l.back());
}

ExactRational cluster_coeff_bar(int l0, std::span<const int> rest) {
  if (l0 < 1) throw std::invalid_argument("cluster_coeff_bar requires l0 >= 1");
  std::vector<int> parts;
  parts.reserve(rest.size() + 1);
  parts.push_back(2 * l0 - 1);
  parts.insert(parts.end(), rest.begin(), rest.end());
  return cluster_coeff(Composition(std::move(parts)));
}

}  // namespace areawalk
