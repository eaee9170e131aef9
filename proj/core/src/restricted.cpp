#include "areawalk/restricted.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "areawalk/enumeration.hpp"
#include "composition_sum.hpp"

namespace areawalk {

using detail::FactorLayout;

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " requires n >= 1, got " + std::to_string(n));
}

BigInt pow2(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

AreaPolynomial halve_exact(AreaPolynomial p, const char* what) {
  AreaPolynomial::Terms terms;
  for (const auto& [t, c] : p.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) {
      throw std::logic_error(std::string(what) + ": paired-line sum has odd coefficient at t=" + std::to_string(t));
    }
    terms.emplace(t, BigInt(c / 2));
  }
  return AreaPolynomial(std::move(terms));
}

}  // namespace

int paradiagonal_weight_even(const Composition& c, int I) {
  if (I < 0) throw std::invalid_argument("paradiagonal index I must be >= 0");
  return c.level(I) + c.level(I + 1);
}

int paradiagonal_weight_odd(const Composition& c, int I) {
  if (I < 0) throw std::invalid_argument("paradiagonal index I must be >= 0");
  // parts()[0] is l_0, parts()[i] is l_i.
  auto part = [&](int i) { return (i >= 0 && static_cast<std::size_t>(i) < c.size()) ? c[static_cast<std::size_t>(i)] : 0; };
  if (I == 0) return 2 * part(0) - 1 + part(1);
  return part(I) + part(I + 1);
}

AreaPolynomial gf_diagonal(int n, unsigned threads) {
  return gf_paradiagonal_even(n, 0, LineNormalization::single_line, threads);
}

BigInt count_diagonal(int n, std::int64_t doubled_area) {
  require_positive(n, "count_diagonal");
  BigInt total = 0;
  std::vector<detail::WeightedLevel> levels;
  for (const Composition& c : compositions(n)) {
    levels.clear();
    BigInt chain = 1;
    for (std::size_t idx = 1; idx < c.size(); ++idx) {
      const int r = static_cast<int>(idx) + 1;
      levels.push_back({c[idx], 2 * r - 1});
      chain *= binomial(c[idx - 1] + c[idx] - 1, c[idx]);
    }
    const BigInt inner = detail::inner_binomial_sum(c[0], levels, doubled_area);
    if (inner != 0) total += pow2(static_cast<unsigned>(c[0])) * chain * inner;
  }
  return total;
}

AreaPolynomial gf_paradiagonal_even(int n, int I, LineNormalization norm, unsigned threads) {
  require_positive(n, "gf_paradiagonal_even");
  if (I < 0) throw std::invalid_argument("paradiagonal index I must be >= 0");
  if (I > n) return {};
  AreaPolynomial paired = detail::composition_sum(
      n, FactorLayout::half_odd_levels, threads, [I](const Composition& c) -> BigInt {
        if (static_cast<int>(c.size()) < I) return 0;
        const int weight = paradiagonal_weight_even(c, I);
        if (weight == 0) return 0;
        return detail::require_integer(ExactRational(BigInt(weight * pow2(static_cast<unsigned>(c[0])))) * cluster_coeff(c),
                                       "gf_paradiagonal_even");
      });
  if (I == 0 || norm == LineNormalization::paired_lines) return paired;
  return halve_exact(std::move(paired), "gf_paradiagonal_even");
}

AreaPolynomial gf_paradiagonal_odd(int n, int I, LineNormalization norm, unsigned threads) {
  require_positive(n, "gf_paradiagonal_odd");
  if (I < 0) throw std::invalid_argument("paradiagonal index I must be >= 0");
  if (I > n - 1) return {};
  AreaPolynomial paired = detail::composition_sum(
      n, FactorLayout::integer_levels, threads, [I](const Composition& c) -> BigInt {
        // parts (l_0, l_1..l_j): j = size - 1 must reach I.
        if (static_cast<int>(c.size()) - 1 < I) return 0;
        const int weight = paradiagonal_weight_odd(c, I);
        if (weight == 0) return 0;
        return detail::require_integer(ExactRational(BigInt(weight)) * cluster_coeff_bar(c[0], c.parts().subspan(1)),
                                       "gf_paradiagonal_odd");
      });
  // Odd lines are never self-mirrored, so the sum always covers {c, -c}.
  if (norm == LineNormalization::paired_lines) return paired;
  return halve_exact(std::move(paired), "gf_paradiagonal_odd");
}

AreaPolynomial gf_line(int n_steps, std::int64_t c, unsigned threads) {
  const WalkLength length(n_steps);
  const ParadiagonalSpec line(c);
  if (line.canonical() > n_steps) return {};
  if (line.is_even() != length.is_even()) {
    throw std::invalid_argument("line k+l=" + std::to_string(c) + " has parity opposite to walk length " +
                                std::to_string(n_steps));
  }
  const int I = static_cast<int>(line.index());
  return length.is_even() ? gf_paradiagonal_even(length.half(), I, LineNormalization::single_line, threads)
                          : gf_paradiagonal_odd(length.half(), I, LineNormalization::single_line, threads);
}

bool sum_over_lines_check(int n_steps, unsigned threads) {
  const WalkLength length(n_steps);
  AreaPolynomial sum;
  for (std::int64_t c = n_steps % 2; c <= n_steps; c += 2) {
    AreaPolynomial line = gf_line(n_steps, c, threads);
    if (c != 0) line *= 2;  // k + l = -c by the pi rotation
    sum += line;
  }
  return sum == gf_open(length, threads);
}

}  // namespace areawalk
