#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace areawalk {

using BigInt = mpz_class;

/// Exact Laurent polynomial in the area variable Q.
///
/// The exponent is the doubled algebraic area t = 2A, so walks with
/// half-integer area still land on integer exponents. Coefficients are
/// arbitrary-precision integers and zero coefficients are never stored.
class AreaPolynomial {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  AreaPolynomial() = default;
  explicit AreaPolynomial(Terms terms);
  AreaPolynomial(std::initializer_list<std::pair<const std::int64_t, BigInt>> terms);

  static AreaPolynomial constant(const BigInt& value);
  static AreaPolynomial monomial(std::int64_t t, const BigInt& value);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Smallest / largest stored exponent. Undefined on an empty polynomial.
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  BigInt coefficient(std::int64_t t) const;

  /// True when coefficient(t) == coefficient(-t) for every t.
  bool is_palindromic() const;

  /// Adds value to the coefficient of Q^t, dropping the term if it cancels.
  void add_term(std::int64_t t, const BigInt& value);

  AreaPolynomial& operator+=(const AreaPolynomial& other);
  AreaPolynomial& operator*=(const BigInt& scalar);

  friend bool operator==(const AreaPolynomial&, const AreaPolynomial&) = default;

 private:
  Terms terms_;
};

/// Exact fraction, always stored in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const BigInt& numerator, const BigInt& denominator = 1);
  static ExactRational from_mpq(const mpq_class& value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class& value() const { return value_; }

  ExactRational& operator*=(const ExactRational& other);
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

  std::string to_string() const;

 private:
  mpq_class value_{0};
};

AreaPolynomial poly_add(const AreaPolynomial& a, const AreaPolynomial& b);
AreaPolynomial poly_mul(const AreaPolynomial& a, const AreaPolynomial& b);
AreaPolynomial poly_pow(const AreaPolynomial& a, unsigned exponent);
AreaPolynomial poly_scale(const AreaPolynomial& a, const BigInt& scalar);

/// Value at Q = 1, i.e. the sum of all coefficients.
BigInt poly_eval_unit(const AreaPolynomial& a);

/// exp(2 pi i k / q), with k reduced mod q exactly before taking the angle.
std::complex<double> root_of_unity(std::int64_t k, std::int64_t q);

/// The root of unity exp(i 2 pi p (s+1) / (2s+1)) used by the odd torus
/// representation. Throws std::invalid_argument unless s >= 1, p >= 1 and
/// gcd(p, 2s+1) == 1.
std::complex<double> torus_root(int p, int s);

/// Numerical value at Q = torus_root(p, s). Coefficients are first folded
/// exactly by t mod (2s+1) so the only rounding is in the final sum.
std::complex<double> poly_eval_root(const AreaPolynomial& a, int p, int s);

inline AreaPolynomial operator+(AreaPolynomial a, const AreaPolynomial& b) { return a += b; }
inline AreaPolynomial operator*(const AreaPolynomial& a, const AreaPolynomial& b) { return poly_mul(a, b); }

std::string to_string(const AreaPolynomial& a);

}  // namespace areawalk
