#include "areawalk/enumeration.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "areawalk/compositions.hpp"
#include "composition_sum.hpp"

namespace areawalk {

using detail::FactorLayout;

WalkLength::WalkLength(int n_steps) : steps_(n_steps) {
  if (n_steps < 1) throw std::invalid_argument("walk length must be >= 1, got " + std::to_string(n_steps));
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " requires n >= 1, got " + std::to_string(n));
}

BigInt pow2(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

// 2n * 2^{l_1} * c(l_1..l_j)
BigInt even_prefactor(int n, const Composition& c) {
  return detail::require_integer(ExactRational(BigInt(2 * n * pow2(static_cast<unsigned>(c[0])))) * cluster_coeff(c),
                                 "gf_open_even");
}

// (2n - 1) * c(2 l_0 - 1, l_1..l_j); the 4^{l_0} lives in the factor product.
BigInt odd_prefactor(int n, const Composition& c) {
  return detail::require_integer(ExactRational(BigInt(2 * n - 1)) * cluster_coeff_bar(c[0], c.parts().subspan(1)),
                                 "gf_open_odd");
}

}  // namespace

AreaPolynomial gf_open_even(int n, unsigned threads) {
  require_positive(n, "gf_open_even");
  return detail::composition_sum(n, FactorLayout::half_odd_levels, threads,
                                 [n](const Composition& c) { return even_prefactor(n, c); });
}

AreaPolynomial gf_open_odd(int n, unsigned threads) {
  require_positive(n, "gf_open_odd");
  return detail::composition_sum(n, FactorLayout::integer_levels, threads,
                                 [n](const Composition& c) { return odd_prefactor(n, c); });
}

AreaPolynomial gf_open(WalkLength length, unsigned threads) {
  return length.is_even() ? gf_open_even(length.half(), threads) : gf_open_odd(length.half(), threads);
}

AreaPolynomial gf_open(int n_steps, unsigned threads) { return gf_open(WalkLength(n_steps), threads); }

BigInt count_open_even(int n, std::int64_t doubled_area) {
  require_positive(n, "count_open_even");
  BigInt total = 0;
  std::vector<detail::WeightedLevel> levels;
  for (const Composition& c : compositions(n)) {
    levels.clear();
    // Level r (1-based) pairs carry exponent steps of 2r - 1.
    for (std::size_t idx = 1; idx < c.size(); ++idx) {
      const int r = static_cast<int>(idx) + 1;
      levels.push_back({c[idx], 2 * r - 1});
    }
    const BigInt inner = detail::inner_binomial_sum(c[0], levels, doubled_area);
    if (inner != 0) total += even_prefactor(n, c) * inner;
  }
  return total;
}

BigInt count_open_odd(int n, std::int64_t area) {
  require_positive(n, "count_open_odd");
  BigInt total = 0;
  std::vector<detail::WeightedLevel> levels;
  for (const Composition& c : compositions(n)) {
    // parts are (l_0, l_1, ..., l_j); a lone l_0 behaves as l_1 = 0.
    const int l0 = c[0];
    const int l1 = c.size() > 1 ? c[1] : 0;
    levels.clear();
    for (std::size_t r = 2; r < c.size(); ++r) levels.push_back({c[r], static_cast<int>(r)});
    const BigInt inner = detail::inner_binomial_sum(l1, levels, area);
    if (inner == 0) continue;
    BigInt four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(l0));
    total += odd_prefactor(n, c) * four_pow * inner;
  }
  return total;
}

}  // namespace areawalk
