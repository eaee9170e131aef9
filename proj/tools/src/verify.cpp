#include <algorithm>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>

#include "areawalk/compositions.hpp"
#include "areawalk/enumeration.hpp"
#include "areawalk/oracle.hpp"
#include "areawalk/quantum_torus.hpp"
#include "areawalk/restricted.hpp"
#include "cli.hpp"

namespace areawalk::cli {

namespace {

struct Check {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::string note;
};

using cd = std::complex<double>;

BigInt four_pow(int n) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return out;
}

// Exact checks report the number of mismatching items as the residual.
Check exact(std::string name, int mismatches, std::string note) {
  return Check{std::move(name), mismatches == 0, static_cast<double>(mismatches), std::move(note)};
}

Check within(std::string name, double residual, double tol, std::string note) {
  return Check{std::move(name), residual < tol, residual, std::move(note)};
}

std::string range_note(const char* what, int lo, int hi) {
  return std::string(what) + " " + std::to_string(lo) + ".." + std::to_string(hi);
}

// No other line congruent to c mod q has the walk's parity and is in reach.
bool line_is_isolated(int len, std::int64_t c, int q) {
  for (std::int64_t other = c - 4 * q; other <= c + 4 * q; other += q) {
    if (other != c && std::abs(other) <= len && (len - other) % 2 == 0) return false;
  }
  return true;
}

std::vector<Check> suite_formulas(const RunConfig& cfg) {
  std::vector<Check> out;
  const int top = std::min(cfg.max_n, cfg.formula_cap);

  int bad = 0;
  bad += gf_open(1) != AreaPolynomial{{0, 4}};
  bad += gf_open(2) != AreaPolynomial{{-1, 4}, {0, 8}, {1, 4}};
  bad += gf_open(3) != AreaPolynomial{{-2, 12}, {0, 40}, {2, 12}};
  bad += gf_open(4) != AreaPolynomial{{-4, 8}, {-3, 16}, {-2, 16}, {-1, 48}, {0, 80},
                                      {1, 48},  {2, 16},  {3, 16},  {4, 8}};
  out.push_back(exact("formulas.worked_examples", bad, "G_1..G_4 exact"));

  bad = 0;
  for (int n = 1; n <= top; ++n) bad += poly_eval_unit(gf_open(n, cfg.threads)) != four_pow(n);
  out.push_back(exact("formulas.normalization", bad, range_note("G_n(1) = 4^n for n =", 1, top)));

  const int dp_top = std::min(top, cfg.dp_cap);
  bad = 0;
  for (int n = 1; n <= dp_top; ++n) bad += gf_open(n, cfg.threads) != dp_enumerate(n, cfg.dp_cap, cfg.threads).total();
  out.push_back(exact("formulas.gf_vs_dp", bad, range_note("composition sum vs DP oracle, lengths", 1, dp_top)));

  bad = 0;
  for (int len = 1; len <= top; ++len) {
    const AreaPolynomial g = gf_open(len, cfg.threads);
    const int n = (len + 1) / 2;
    for (std::int64_t t = g.min_exponent(); t <= g.max_exponent(); ++t) {
      const BigInt literal = len % 2 == 0 ? count_open_even(n, t) : (t % 2 != 0 ? BigInt(0) : count_open_odd(n, t / 2));
      bad += literal != g.coefficient(t);
    }
  }
  out.push_back(exact("formulas.count_literal", bad, range_note("literal multi-sum vs extraction, lengths", 1, top)));

  bad = 0;
  for (int n = 1; 2 * n <= top; ++n) {
    const AreaPolynomial d = gf_diagonal(n, cfg.threads);
    for (std::int64_t t = d.min_exponent(); t <= d.max_exponent(); ++t) bad += count_diagonal(n, t) != d.coefficient(t);
  }
  out.push_back(exact("formulas.count_diagonal", bad, "diagonal multi-sum vs extraction, even lengths <= " +
                                                        std::to_string(top)));
  return out;
}

std::vector<Check> suite_oracle(const RunConfig& cfg) {
  const int top = std::min(cfg.max_n, cfg.brute_cap);
  int bad = 0;
  for (int n = 1; n <= top; ++n) {
    bad += dp_enumerate(n, cfg.dp_cap, cfg.threads) != brute_force(n, cfg.brute_cap, cfg.threads);
  }
  return {exact("oracle.dp_vs_brute", bad, range_note("endpoint histograms, lengths", 1, top))};
}

std::vector<Check> suite_restricted(const RunConfig& cfg) {
  std::vector<Check> out;
  const int top = std::min({cfg.max_n, cfg.dp_cap, cfg.formula_cap});

  int bad = 0;
  for (int len = 1; len <= top; ++len) {
    const EndpointHistogram h = dp_enumerate(len, cfg.dp_cap, cfg.threads);
    for (int c = -len; c <= len; c += 2) bad += gf_line(len, c, cfg.threads) != line_gf(h, c);
  }
  out.push_back(exact("restricted.lines_vs_dp", bad, range_note("single-line gf vs oracle line sums, lengths", 1, top)));

  bad = 0;
  for (int len = 1; len <= top; ++len) bad += !sum_over_lines_check(len, cfg.threads);
  out.push_back(exact("restricted.sum_over_lines", bad, range_note("lines sum to G_n, lengths", 1, top)));

  bad = 0;
  for (int n = 1; 2 * n <= top; ++n) {
    for (int I = 1; I <= n; ++I) {
      bad += gf_paradiagonal_even(n, I, LineNormalization::paired_lines, cfg.threads) !=
             poly_scale(gf_paradiagonal_even(n, I, LineNormalization::single_line, cfg.threads), 2);
    }
    for (int I = 0; I < n; ++I) {
      bad += gf_paradiagonal_odd(n, I, LineNormalization::paired_lines, cfg.threads) !=
             poly_scale(gf_paradiagonal_odd(n, I, LineNormalization::single_line, cfg.threads), 2);
    }
  }
  out.push_back(exact("restricted.paired_normalization", bad,
                      "raw composition sums count lines {c,-c}; single line = raw/2 except c = 0"));
  return out;
}

std::vector<Check> suite_torus(const RunConfig& cfg) {
  std::vector<Check> out;
  const int top = cfg.max_n;
  for (const auto& [p, s] : cfg.ps) {
    const std::string tag = "[" + std::to_string(p) + ":" + std::to_string(s) + "]";
    const TorusRepresentation rep = build_rep_q(p, s);

    double algebra = 0.0;
    for (Casimir kx : {Casimir::zero, Casimir::pi_over_q}) {
      for (Casimir ky : {Casimir::zero, Casimir::pi_over_q}) {
        algebra = std::max(algebra, relation_residuals(build_rep_q(p, s, kx, ky)).max_algebra());
      }
    }
    const double traces = relation_residuals(rep).trace_conditions;
    out.push_back(within("torus.relations" + tag, std::max(algebra, traces), 1e-12,
                         "algebra residuals in all four Casimir sectors; trace conditions at zero Casimirs"));

    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
      const cd diff = trace_gf(rep, n) - poly_eval_root(gf_open(n, cfg.threads), p, s);
      worst = std::max(worst, std::abs(diff) / std::pow(4.0, n));
    }
    out.push_back(within("torus.trace_gf" + tag, worst, 1e-9,
                         range_note("|tr(H^n sigma) - G_n(Q)| / 4^n, n =", 1, top) + ", including n > 2s"));

    worst = 0.0;
    for (int n = 1; n < rep.q && 2 * n <= top; ++n) {
      const cd want = poly_eval_root(gf_diagonal(n, cfg.threads), p, s);
      worst = std::max(worst, std::abs(matrix_element(rep, 2 * n, 0, 0) - want) / std::max(1.0, std::abs(want)));
    }
    out.push_back(within("torus.diagonal_element" + tag, worst, 1e-9, "<0|H_od^2n|0> vs gf_diagonal(n)(Q), 2n < 2q"));

    worst = 0.0;
    const int el_top = std::min({top, cfg.dp_cap, 10});
    for (int len = 1; len <= el_top; ++len) {
      const EndpointHistogram h = dp_enumerate(len, cfg.dp_cap, cfg.threads);
      const int n = (len + 1) / 2;
      if (len % 2 == 0) {
        for (int I = 0; I <= n; ++I) {
          if (!line_is_isolated(len, 2 * I, rep.q)) continue;
          for (int J = 0; J < rep.q; ++J) {
            cd want{0.0, 0.0};
            for (const auto& [e, poly] : h.by_endpoint()) {
              if (e.k + e.l != 2 * I) continue;
              want += poly_eval_root(poly, p, s) * root_of_unity(2LL * J * e.k * p * (s + 1), rep.q);
            }
            worst = std::max(worst, std::abs(matrix_element_paradiagonal(rep, len, I, J) - want) / std::pow(4.0, len));
          }
        }
      } else {
        for (int I = 0; I < n; ++I) {
          if (!line_is_isolated(len, 2 * I + 1, rep.q)) continue;
          const cd want = poly_eval_root(line_gf(h, 2 * I + 1), p, s);
          worst = std::max(worst, std::abs(matrix_element_odd_paradiagonal(rep, len, I) - want) / std::pow(4.0, len));
        }
      }
    }
    out.push_back(within("torus.paradiagonal_elements" + tag, worst, 1e-9,
                         "orientation: <J-I|H_od^2n|J+I> = sum_{k+l=+2I} g_kl(Q) Q^{+2Jk}; "
                         "<s-I|H_od^(2n-1)|-s+I> = line k+l=2I+1; no factor 1/2; lines isolated mod q"));
  }

  double block = 0.0;
  for (int q : {2, 3, 5}) {
    const RelationResiduals r = relation_residuals(build_rep_2q(1, q));
    block = std::max({block, r.max_algebra(), r.trace_conditions});
  }
  out.push_back(within("torus.block_2q", block, 1e-12, "2q-dimensional representation: relations hold, sigma-traces vanish"));

  int bad = 0;
  for (auto [p, q] : {std::pair{1, 4}, {1, 6}, {3, 8}}) bad += !verify_even_q_vanishing(p, q);
  out.push_back(exact("torus.even_q_vanishing", bad, "q = 4, 6, 8: tr(sigma) or tr(v sigma) vanishes in every sector"));
  return out;
}

std::vector<Check> suite_properties(const RunConfig& cfg) {
  std::vector<Check> out;
  const int top = std::min(cfg.max_n, cfg.formula_cap);
  int pal = 0, parity = 0;
  for (int len = 1; len <= top; ++len) {
    const AreaPolynomial g = gf_open(len, cfg.threads);
    pal += !g.is_palindromic();
    if (len % 2 == 1) {
      for (const auto& [t, c] : g.terms()) parity += t % 2 != 0;
    }
  }
  out.push_back(exact("properties.palindromic", pal, range_note("C_n(A) = C_n(-A), lengths", 1, top)));
  out.push_back(exact("properties.odd_even_support", parity, "odd lengths carry only even t"));

  const int comp_top = std::min(top, 12);
  int integral = 0, alt = 0;
  for (int n = 1; n <= comp_top; ++n) {
    for (const Composition& c : compositions(n)) {
      integral += !(ExactRational(2 * n) * cluster_coeff(c)).is_integer();
      integral += !(ExactRational(2 * n - 1) * cluster_coeff_bar(c[0], c.parts().subspan(1))).is_integer();
      alt += cluster_coeff(c) != cluster_coeff_alt(c);
    }
  }
  out.push_back(exact("properties.integrality", integral, range_note("2n c and (2n-1) c-bar integral, n =", 1, comp_top)));
  out.push_back(exact("properties.cluster_alt", alt, range_note("both product forms of c agree, n =", 1, comp_top)));
  return out;
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::map<std::string, std::function<std::vector<Check>(const RunConfig&)>> suites{
      {"formulas", suite_formulas}, {"oracle", suite_oracle},         {"restricted", suite_restricted},
      {"torus", suite_torus},       {"properties", suite_properties},
  };
  if (config.max_n < 1) throw UsageError("verify: --max-n must be >= 1");
  std::vector<std::string> selected;
  if (config.suite == "all") {
    selected = {"formulas", "oracle", "restricted", "torus", "properties"};
  } else if (suites.contains(config.suite)) {
    selected = {config.suite};
  } else {
    throw UsageError("verify: unknown --suite '" + config.suite + "'");
  }

  int failed = 0, total = 0;
  for (const std::string& name : selected) {
    for (const Check& c : suites.at(name)(config)) {
      nlohmann::ordered_json line;
      line["name"] = c.name;
      line["status"] = c.pass ? "pass" : "fail";
      line["residual"] = c.residual;
      line["note"] = c.note;
      out << line.dump() << '\n';
      ++total;
      failed += !c.pass;
    }
  }
  err << "verify: " << total - failed << "/" << total << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace areawalk::cli
