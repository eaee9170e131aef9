#include "areawalk/laurent.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dense_poly.hpp"

namespace areawalk {

AreaPolynomial::AreaPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

AreaPolynomial::AreaPolynomial(std::initializer_list<std::pair<const std::int64_t, BigInt>> terms)
    : AreaPolynomial(Terms(terms)) {}

AreaPolynomial AreaPolynomial::constant(const BigInt& value) { return monomial(0, value); }

AreaPolynomial AreaPolynomial::monomial(std::int64_t t, const BigInt& value) {
  AreaPolynomial out;
  out.add_term(t, value);
  return out;
}

BigInt AreaPolynomial::coefficient(std::int64_t t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool AreaPolynomial::is_palindromic() const {
  for (const auto& [t, c] : terms_) {
    if (t > 0) break;
    auto it = terms_.find(-t);
    if (it == terms_.end() || it->second != c) return false;
  }
  for (const auto& [t, c] : terms_) {
    if (t > 0 && !terms_.contains(-t)) return false;
  }
  return true;
}

void AreaPolynomial::add_term(std::int64_t t, const BigInt& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

AreaPolynomial& AreaPolynomial::operator+=(const AreaPolynomial& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

AreaPolynomial& AreaPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::from_mpq(const mpq_class& value) {
  ExactRational out;
  out.value_ = value;
  out.value_.canonicalize();
  return out;
}

ExactRational& ExactRational::operator*=(const ExactRational& other) {
  value_ *= other.value_;
  return *this;
}

std::string ExactRational::to_string() const { return value_.get_str(); }

AreaPolynomial poly_add(const AreaPolynomial& a, const AreaPolynomial& b) { return a + b; }

AreaPolynomial poly_mul(const AreaPolynomial& a, const AreaPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  detail::DensePoly out = detail::DensePoly::from(a);
  out.multiply(b);
  return out.to_polynomial();
}

AreaPolynomial poly_pow(const AreaPolynomial& a, unsigned exponent) {
  AreaPolynomial result = AreaPolynomial::constant(1);
  AreaPolynomial base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = poly_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = poly_mul(base, base);
  }
  return result;
}

AreaPolynomial poly_scale(const AreaPolynomial& a, const BigInt& scalar) {
  AreaPolynomial out = a;
  out *= scalar;
  return out;
}

BigInt poly_eval_unit(const AreaPolynomial& a) {
  BigInt sum = 0;
  for (const auto& [t, c] : a.terms()) sum += c;
  return sum;
}

std::complex<double> root_of_unity(std::int64_t k, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("root_of_unity: q must be positive");
  const std::int64_t r = ((k % q) + q) % q;
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
  return std::polar(1.0, angle);
}

namespace {

void check_torus_parameters(int p, int s) {
  if (s < 1) throw std::invalid_argument("torus parameter s must be >= 1");
  if (p < 1) throw std::invalid_argument("torus parameter p must be >= 1");
  if (std::gcd(p, 2 * s + 1) != 1) {
    throw std::invalid_argument("torus parameters require gcd(p, 2s+1) == 1, got p=" + std::to_string(p) +
                                " s=" + std::to_string(s));
  }
}

}  // namespace

std::complex<double> torus_root(int p, int s) {
  check_torus_parameters(p, s);
  const std::int64_t q = 2 * s + 1;
  return root_of_unity(static_cast<std::int64_t>(p) * (s + 1), q);
}

std::complex<double> poly_eval_root(const AreaPolynomial& a, int p, int s) {
  check_torus_parameters(p, s);
  const std::int64_t q = 2 * s + 1;
  const std::int64_t step = (static_cast<std::int64_t>(p) * (s + 1)) % q;

  // Q^q = 1, so collect coefficients by residue class first.
  std::vector<BigInt> folded(static_cast<std::size_t>(q), BigInt(0));
  for (const auto& [t, c] : a.terms()) {
    const std::int64_t r = ((t % q) + q) % q;
    folded[static_cast<std::size_t>(r)] += c;
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t r = 0; r < q; ++r) {
    const BigInt& c = folded[static_cast<std::size_t>(r)];
    if (c == 0) continue;
    sum += c.get_d() * root_of_unity(step * r, q);
  }
  return sum;
}

std::string to_string(const AreaPolynomial& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [t, c] : a.terms()) {
    if (!first) os << ", ";
    first = false;
    os << t << ':' << c.get_str();
  }
  os << '}';
  return os.str();
}

}  // namespace areawalk
