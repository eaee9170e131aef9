// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "areawalk/compositions.hpp"
#include "areawalk/enumeration.hpp"
#include "areawalk/oracle.hpp"
#include "areawalk/quantum_torus.hpp"
#include "areawalk/restricted.hpp"
#include "naive_walks.hpp"

using namespace areawalk;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::pair<int, int> kTorusParams[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}};

BigInt four_pow(int n) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return out;
}

AreaPolynomial from_naive(const areawalk::testing::NaiveCounts& counts) {
  AreaPolynomial p;
  for (const auto& [t, c] : counts) p.add_term(t, BigInt(static_cast<unsigned long>(c)));
  return p;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// Other lines congruent to c mod q that a walk of this length could reach.
bool line_is_isolated(int len, std::int64_t c, int q) {
  for (std::int64_t other = c - 4 * q; other <= c + 4 * q; other += q) {
    if (other != c && std::abs(other) <= len && (len - other) % 2 == 0) return false;
  }
  return true;
}

Outcome worked_examples() {
  const AreaPolynomial g1{{0, 4}};
  const AreaPolynomial g2{{-1, 4}, {0, 8}, {1, 4}};
  const AreaPolynomial g3{{-2, 12}, {0, 40}, {2, 12}};
  const AreaPolynomial g4{{-4, 8}, {-3, 16}, {-2, 16}, {-1, 48}, {0, 80}, {1, 48}, {2, 16}, {3, 16}, {4, 8}};
  Outcome o;
  o.pass = gf_open(1) == g1 && gf_open(2) == g2 && gf_open(3) == g3 && gf_open(4) == g4;
  o.detail = "G_3 = " + to_string(gf_open(3));
  return o;
}

Outcome normalization() {
  Outcome o;
  int bad = 0;
  for (int n = 1; n <= 24; ++n) bad += poly_eval_unit(gf_open(n)) != four_pow(n);
  o.pass = bad == 0;
  o.detail = "lengths 1..24, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome oracle_equivalence() {
  int bad_brute = 0, bad_gf = 0, bad_naive = 0;
  for (int n = 1; n <= 12; ++n) bad_brute += dp_enumerate(n) != brute_force(n);
  for (int n = 1; n <= 14; ++n) bad_gf += gf_open(n) != dp_enumerate(n).total();
  // Third, string-based route for short walks.
  for (int n = 1; n <= 7; ++n) {
    const EndpointHistogram h = dp_enumerate(n);
    const auto naive = areawalk::testing::naive_histogram(n);
    bad_naive += h.by_endpoint().size() != naive.size();
    for (const auto& [e, counts] : naive) bad_naive += endpoint_gf(h, e.first, e.second) != from_naive(counts);
  }
  Outcome o;
  o.pass = bad_brute == 0 && bad_gf == 0 && bad_naive == 0;
  o.detail = "dp==brute n<=12 (" + std::to_string(bad_brute) + " bad), gf==dp n<=14 (" + std::to_string(bad_gf) +
             " bad), dp==shoelace n<=7 (" + std::to_string(bad_naive) + " bad)";
  return o;
}

Outcome counting_formulas() {
  int bad = 0, checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const AreaPolynomial even = gf_open_even(n);
    for (std::int64_t t = even.min_exponent(); t <= even.max_exponent(); ++t, ++checked) {
      bad += count_open_even(n, t) != even.coefficient(t);
    }
    const AreaPolynomial odd = gf_open_odd(n);
    for (std::int64_t a = odd.min_exponent() / 2; a <= odd.max_exponent() / 2; ++a, ++checked) {
      bad += count_open_odd(n, a) != odd.coefficient(2 * a);
    }
    const AreaPolynomial diag = gf_diagonal(n);
    for (std::int64_t t = diag.min_exponent(); t <= diag.max_exponent(); ++t, ++checked) {
      bad += count_diagonal(n, t) != diag.coefficient(t);
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(checked) + " coefficients for n <= 8, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome restricted_walks() {
  int bad = 0, lines = 0;
  for (int n = 1; n <= 7; ++n) {
    const EndpointHistogram even = dp_enumerate(2 * n);
    bad += gf_diagonal(n) != line_gf(even, 0);
    for (int I = 0; I <= n; ++I, lines += 2) {
      const AreaPolynomial g = gf_paradiagonal_even(n, I);
      bad += g != line_gf(even, 2 * I);
      bad += g != line_gf(even, -2 * I);
    }
    const EndpointHistogram odd = dp_enumerate(2 * n - 1);
    for (int I = 0; I < n; ++I, lines += 2) {
      const AreaPolynomial g = gf_paradiagonal_odd(n, I);
      bad += g != line_gf(odd, 2 * I + 1);
      bad += g != line_gf(odd, -(2 * I + 1));
    }
  }
  int bad_sum = 0;
  for (int len = 1; len <= 14; ++len) bad_sum += !sum_over_lines_check(len);
  Outcome o;
  o.pass = bad == 0 && bad_sum == 0;
  o.detail = std::to_string(lines) + " line comparisons for n <= 7 (" + std::to_string(bad) +
             " bad), sum over lines lengths 1..14 (" + std::to_string(bad_sum) + " bad)";
  return o;
}

Outcome torus_cross_check() {
  double worst = 0.0;
  for (const auto& [p, s] : kTorusParams) {
    const TorusRepresentation rep = build_rep_q(p, s);
    for (int n = 1; n <= 12; ++n) {
      const double diff = std::abs(trace_gf(rep, n) - poly_eval_root(gf_open(n), p, s));
      worst = std::max(worst, diff / std::pow(4.0, n));
    }
  }
  Outcome o;
  o.pass = worst < 1e-9;
  o.detail = "max |tr(H^n sigma) - G_n(Q)| / 4^n = " + sci(worst) + " over 5 (p,s), n <= 12";
  return o;
}

Outcome representation_invariants() {
  double algebra = 0.0, traces = 0.0, block = 0.0;
  for (const auto& [p, s] : kTorusParams) {
    for (Casimir kx : {Casimir::zero, Casimir::pi_over_q}) {
      for (Casimir ky : {Casimir::zero, Casimir::pi_over_q}) {
        algebra = std::max(algebra, relation_residuals(build_rep_q(p, s, kx, ky)).max_algebra());
      }
    }
    traces = std::max(traces, relation_residuals(build_rep_q(p, s)).trace_conditions);
  }
  for (int q : {2, 3, 4, 5}) {
    const RelationResiduals r = relation_residuals(build_rep_2q(1, q));
    block = std::max({block, r.max_algebra(), r.trace_conditions});
  }
  // Even q: directly recompute the sigma-traces in every Casimir sector.
  double even_q = 0.0;
  bool even_flag = true;
  for (auto [p, q] : {std::pair{1, 2}, {1, 4}, {3, 4}, {1, 6}, {5, 6}, {3, 8}}) {
    even_flag = even_flag && verify_even_q_vanishing(p, q);
    for (Casimir kx : {Casimir::zero, Casimir::pi_over_q}) {
      for (Casimir ky : {Casimir::zero, Casimir::pi_over_q}) {
        const TorusRepresentation rep = build_periodic_rep(p, q, kx, ky);
        algebra = std::max(algebra, relation_residuals(rep).max_algebra());
        const cd tr_sigma = rep.sigma.trace();
        const cd tr_v_sigma = (rep.v * rep.sigma).trace();
        even_q = std::max(even_q, std::min(std::abs(tr_sigma), std::abs(tr_v_sigma)));
      }
    }
  }
  Outcome o;
  o.pass = algebra < 1e-12 && traces < 1e-12 && block < 1e-12 && even_q < 1e-12 && even_flag;
  o.detail = "algebra " + sci(algebra) + ", trace conditions " + sci(traces) + ", 2q block " + sci(block) +
             ", even q min|tr| " + sci(even_q);
  return o;
}

Outcome matrix_elements() {
  double diag_rel = 0.0, para = 0.0;
  int compared = 0;
  for (const auto& [p, s] : kTorusParams) {
    const TorusRepresentation rep = build_rep_q(p, s);
    for (int n = 1; n < rep.q; ++n) {
      const cd want = poly_eval_root(gf_diagonal(n), p, s);
      diag_rel = std::max(diag_rel, std::abs(matrix_element(rep, 2 * n, 0, 0) - want) / std::abs(want));
    }
    for (int len = 1; len <= 12; ++len) {
      const EndpointHistogram h = dp_enumerate(len);
      const int n = (len + 1) / 2;
      if (len % 2 == 0) {
        for (int I = 0; I <= n; ++I) {
          if (!line_is_isolated(len, 2 * I, rep.q)) continue;
          for (int J = 0; J < rep.q; ++J, ++compared) {
            cd want{0.0, 0.0};
            for (const auto& [e, poly] : h.by_endpoint()) {
              if (e.k + e.l == 2 * I) want += poly_eval_root(poly, p, s) * root_of_unity(2LL * J * e.k * p * (s + 1), rep.q);
            }
            para = std::max(para, std::abs(matrix_element_paradiagonal(rep, len, I, J) - want) / std::pow(4.0, len));
          }
        }
      } else {
        for (int I = 0; I < n; ++I) {
          if (!line_is_isolated(len, 2 * I + 1, rep.q)) continue;
          ++compared;
          const cd want = poly_eval_root(line_gf(h, 2 * I + 1), p, s);
          para = std::max(para, std::abs(matrix_element_odd_paradiagonal(rep, len, I) - want) / std::pow(4.0, len));
        }
      }
    }
  }
  Outcome o;
  o.pass = diag_rel < 1e-9 && para < 1e-9 && compared > 0;
  o.detail = "<0|H_od^2n|0> rel " + sci(diag_rel) + " (n < q); " + std::to_string(compared) +
             " paradiagonal elements, max err/4^len " + sci(para) +
             "; orientation <J-I|H_od^2n|J+I> = sum_{k+l=+2I} g_kl(Q) Q^{+2Jk}, <s-I|H_od^(2n-1)|-s+I> = line 2I+1";
  return o;
}

Outcome property_suite() {
  int pal = 0, parity = 0, integral = 0, alt = 0;
  for (int len = 1; len <= 20; ++len) {
    const AreaPolynomial g = gf_open(len);
    for (const auto& [t, c] : g.terms()) {
      pal += g.coefficient(-t) != c;
      if (len % 2 == 1) parity += t % 2 != 0;
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (const Composition& c : compositions(n)) {
      integral += !(ExactRational(2 * n) * cluster_coeff(c)).is_integer();
      integral += !(ExactRational(2 * n - 1) * cluster_coeff_bar(c[0], c.parts().subspan(1))).is_integer();
      alt += cluster_coeff(c) != cluster_coeff_alt(c);
    }
  }
  Outcome o;
  o.pass = pal == 0 && parity == 0 && integral == 0 && alt == 0;
  o.detail = "palindromic " + std::to_string(pal) + " bad, odd-length odd t " + std::to_string(parity) +
             ", non-integral " + std::to_string(integral) + ", c != c_alt " + std::to_string(alt);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = no limit stated
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "worked examples exact", 1.0, worked_examples},
      {2, "normalization sum 4^n", 120.0, normalization},
      {3, "oracle equivalence", 300.0, oracle_equivalence},
      {4, "counting-formula consistency", 0.0, counting_formulas},
      {5, "restricted walks", 0.0, restricted_walks},
      {6, "torus cross-check", 30.0, torus_cross_check},
      {7, "representation invariants", 0.0, representation_invariants},
      {8, "matrix elements", 0.0, matrix_elements},
      {9, "property suite", 0.0, property_suite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; exceeded time limit " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("criterion %d %-30s %s  (%.2f s) %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
