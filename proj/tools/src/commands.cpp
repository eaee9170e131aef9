#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>

#include "areawalk/enumeration.hpp"
#include "areawalk/oracle.hpp"
#include "areawalk/quantum_torus.hpp"
#include "areawalk/restricted.hpp"
#include "areawalk/serialize.hpp"
#include "cli.hpp"

namespace areawalk::cli {

namespace {

using json = nlohmann::ordered_json;

int require_length(const RunConfig& config) {
  if (!config.length) throw UsageError(config.command + ": --length is required");
  if (*config.length < 1) throw UsageError(config.command + ": --length must be >= 1");
  return *config.length;
}

void check_cap(int n, int cap, const char* flag) {
  if (n > cap) {
    throw UsageError("length " + std::to_string(n) + " exceeds " + flag + " " + std::to_string(cap));
  }
}

json coeffs_json(const AreaPolynomial& p) { return json::parse(polynomial_to_json(p)).at("coeffs"); }

BigInt four_pow(int n) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return out;
}

}  // namespace

int cmd_gf(const RunConfig& config, std::ostream& out, std::ostream&) {
  const int n = require_length(config);
  check_cap(n, config.formula_cap, "--formula-cap");
  const AreaPolynomial p = config.line ? gf_line(n, *config.line, config.threads) : gf_open(n, config.threads);

  switch (config.format.value_or(Format::pretty)) {
    case Format::pretty:
      out << render_pretty(p) << '\n';
      break;
    case Format::csv: {
      const std::string line = config.line ? std::to_string(*config.line) : "";
      out << "length,line,t,count\n";
      for (const auto& [t, c] : p.terms()) out << n << ',' << line << ',' << t << ',' << c.get_str() << '\n';
      break;
    }
    case Format::json: {
      json doc;
      doc["length"] = n;
      doc["line"] = config.line ? json(*config.line) : json(nullptr);
      doc["coeffs"] = coeffs_json(p);
      out << doc.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int n = require_length(config);
  check_cap(n, config.formula_cap, "--formula-cap");
  const bool diagonal = config.line.has_value();
  if (diagonal && *config.line != 0) throw UsageError("count: only --line 0 has a literal counting formula");
  if (diagonal && n % 2 != 0) throw UsageError("count: the diagonal k+l=0 needs an even length");

  const AreaPolynomial gf = diagonal ? gf_diagonal(n / 2, config.threads) : gf_open(n, config.threads);
  const auto literal = [&](std::int64_t t) -> BigInt {
    if (n % 2 == 0) return diagonal ? count_diagonal(n / 2, t) : count_open_even(n / 2, t);
    // Odd lengths only reach integer areas.
    if (t % 2 != 0) return 0;
    return count_open_odd((n + 1) / 2, t / 2);
  };

  std::vector<std::int64_t> targets;
  if (config.only_t) {
    targets.push_back(*config.only_t);
  } else {
    for (std::int64_t t = gf.min_exponent(); t <= gf.max_exponent(); ++t) targets.push_back(t);
  }

  std::map<std::int64_t, BigInt> counts;
  int mismatches = 0;
  for (std::int64_t t : targets) {
    const BigInt a = literal(t);
    const BigInt b = gf.coefficient(t);
    if (a != b) {
      ++mismatches;
      err << "count mismatch: length=" << n << " t=" << t << " literal=" << a.get_str() << " extracted=" << b.get_str()
          << '\n';
    }
    if (a != 0 || config.only_t) counts.emplace(t, a);
  }
  if (mismatches > 0) {
    err << "count: " << mismatches << " disagreement(s) between the literal sum and coefficient extraction\n";
    return kExitVerifyFailed;
  }

  switch (config.format.value_or(Format::csv)) {
    case Format::csv:
      out << "n,t,count\n";
      for (const auto& [t, c] : counts) out << n << ',' << t << ',' << c.get_str() << '\n';
      break;
    case Format::json: {
      json doc;
      doc["n"] = n;
      doc["line"] = diagonal ? json(0) : json(nullptr);
      json rows = json::object();
      for (const auto& [t, c] : counts) rows[std::to_string(t)] = c.get_str();
      doc["counts"] = std::move(rows);
      out << doc.dump() << '\n';
      break;
    }
    case Format::pretty:
      if (config.only_t) {
        out << counts.begin()->second.get_str() << '\n';
      } else {
        for (const auto& [t, c] : counts) out << "t=" << t << ": " << c.get_str() << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_walk(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Walk walk = Walk::parse(config.walk);
  int k = 0, l = 0;
  for (Step s : walk.steps()) {
    k += (s == Step::R) - (s == Step::L);
    l += (s == Step::U) - (s == Step::D);
  }
  const std::int64_t t = radial_double_area(walk);
  switch (config.format.value_or(Format::pretty)) {
    case Format::pretty:
      out << "walk " << (walk.size() == 0 ? "(empty)" : walk.to_string()) << ": endpoint (" << k << ',' << l
          << "), doubled area t=" << t << '\n';
      break;
    case Format::csv:
      out << "walk,k,l,t\n" << walk.to_string() << ',' << k << ',' << l << ',' << t << '\n';
      break;
    case Format::json: {
      json doc;
      doc["walk"] = walk.to_string();
      doc["k"] = k;
      doc["l"] = l;
      doc["t"] = t;
      out << doc.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  const int n = require_length(config);
  EndpointHistogram h;
  if (config.method == "brute") {
    h = brute_force(n, config.brute_cap, config.threads);
  } else if (config.method == "dp" || config.method == "all") {
    h = dp_enumerate(n, config.dp_cap, config.threads);
  } else {
    throw UsageError("oracle: --method must be brute or dp");
  }
  switch (config.format.value_or(Format::csv)) {
    case Format::csv:
      write_histogram_csv(out, h);
      break;
    case Format::json:
      out << histogram_to_json(h) << '\n';
      break;
    case Format::pretty:
      for (const auto& [e, p] : h.by_endpoint()) out << '(' << e.k << ',' << e.l << "): " << render_pretty(p) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_rep(const RunConfig& config, std::ostream& out, std::ostream&) {
  for (const auto& [p, s] : config.ps) out << representation_to_json(build_rep_q(p, s)) << '\n';
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  struct Method {
    std::string name;
    int cap;
  };
  const std::vector<Method> all{{"brute", config.brute_cap}, {"dp", config.dp_cap}, {"formula", config.formula_cap}};
  std::vector<Method> methods;
  for (const Method& m : all) {
    if (config.method == "all" || config.method == m.name) methods.push_back(m);
  }
  if (methods.empty()) throw UsageError("bench: --method must be brute, dp, formula or all");
  if (config.max_n < 1) throw UsageError("bench: --max-n must be >= 1");
  if (config.method != "all") check_cap(config.max_n, methods.front().cap, ("--" + methods.front().name + "-cap").c_str());

  int failures = 0;
  out << "n,method,millis,terms\n";
  for (int n = 1; n <= config.max_n; ++n) {
    for (const Method& m : methods) {
      if (n > m.cap) continue;
      const auto start = std::chrono::steady_clock::now();
      AreaPolynomial total;
      if (m.name == "brute") total = brute_force(n, m.cap, config.threads).total();
      if (m.name == "dp") total = dp_enumerate(n, m.cap, config.threads).total();
      if (m.name == "formula") total = gf_open(n, config.threads);
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      if (poly_eval_unit(total) != four_pow(n)) {
        ++failures;
        err << "bench: " << m.name << " total at n=" << n << " is " << poly_eval_unit(total).get_str() << ", expected 4^"
            << n << '\n';
      }
      out << n << ',' << m.name << ',' << std::fixed << std::setprecision(3) << elapsed.count() << ','
          << total.size() << '\n';
    }
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace areawalk::cli
