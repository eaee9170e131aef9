#pragma once

// Dense working form of AreaPolynomial for the inner loops of the
// composition sums. Not part of the installed interface.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "areawalk/laurent.hpp"

namespace areawalk::detail {

class DensePoly {
 public:
  DensePoly() : offset_(0), coeffs_(1, BigInt(1)) {}

  static DensePoly from(const AreaPolynomial& p) {
    DensePoly d;
    if (p.empty()) {
      d.coeffs_.clear();
      return d;
    }
    d.offset_ = p.min_exponent();
    d.coeffs_.assign(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), BigInt(0));
    for (const auto& [t, c] : p.terms()) d.coeffs_[static_cast<std::size_t>(t - d.offset_)] = c;
    return d;
  }

  void multiply(const AreaPolynomial& p) {
    if (coeffs_.empty()) return;
    if (p.empty()) {
      coeffs_.clear();
      return;
    }
    const std::int64_t lo = p.min_exponent();
    const std::int64_t hi = p.max_exponent();
    std::vector<BigInt> out(coeffs_.size() + static_cast<std::size_t>(hi - lo), BigInt(0));
    for (const auto& [t, c] : p.terms()) {
      const std::size_t shift = static_cast<std::size_t>(t - lo);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) mpz_addmul(out[i + shift].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
      }
    }
    coeffs_ = std::move(out);
    offset_ += lo;
  }

  /// Multiplies by sum_{k=-l}^{l} binom(2l, l+k) Q^{stride k}, the expansion
  /// of (Q^{-stride/2} + Q^{stride/2})^{2l}.
  void multiply_binomial_factor(unsigned l, std::int64_t stride) {
    if (l == 0 || coeffs_.empty()) return;
    if (stride == 0) {
      BigInt four_pow;
      mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, l);
      for (auto& c : coeffs_) c *= four_pow;
      return;
    }
    std::vector<BigInt> weights(2 * l + 1);
    for (unsigned k = 0; k <= 2 * l; ++k) mpz_bin_uiui(weights[k].get_mpz_t(), 2 * l, k);
    const std::size_t span = static_cast<std::size_t>(stride) * 2 * l;
    std::vector<BigInt> out(coeffs_.size() + span, BigInt(0));
    for (unsigned k = 0; k <= 2 * l; ++k) {
      const std::size_t shift = static_cast<std::size_t>(stride) * k;
      const mpz_srcptr w = weights[k].get_mpz_t();
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) mpz_addmul(out[i + shift].get_mpz_t(), coeffs_[i].get_mpz_t(), w);
      }
    }
    coeffs_ = std::move(out);
    offset_ -= stride * static_cast<std::int64_t>(l);
  }

  /// target += scalar * this
  void accumulate_into(AreaPolynomial& target, const BigInt& scalar) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      target.add_term(offset_ + static_cast<std::int64_t>(i), coeffs_[i] * scalar);
    }
  }

  std::int64_t offset() const { return offset_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  AreaPolynomial to_polynomial() const {
    AreaPolynomial out;
    accumulate_into(out, 1);
    return out;
  }

 private:
  std::int64_t offset_;
  std::vector<BigInt> coeffs_;
};

/// Fixed-window dense sum of many DensePoly terms, t in [-bound, bound].
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::int64_t bound = 0)
      : bound_(bound), coeffs_(static_cast<std::size_t>(2 * bound + 1), BigInt(0)) {}

  void add(const DensePoly& p, const BigInt& scalar) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      const std::int64_t t = p.offset() + static_cast<std::int64_t>(i);
      if (t < -bound_ || t > bound_) throw std::logic_error("DenseAccumulator: exponent outside window");
      mpz_addmul(coeffs_[static_cast<std::size_t>(t + bound_)].get_mpz_t(), c[i].get_mpz_t(), scalar.get_mpz_t());
    }
  }

  void merge(const DenseAccumulator& other) {
    if (other.coeffs_.empty()) return;
    if (coeffs_.empty()) {
      *this = other;
      return;
    }
    if (other.bound_ != bound_) throw std::logic_error("DenseAccumulator: window mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }

  AreaPolynomial to_polynomial() const {
    AreaPolynomial::Terms terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) terms.emplace_hint(terms.end(), static_cast<std::int64_t>(i) - bound_, coeffs_[i]);
    }
    return AreaPolynomial(std::move(terms));
  }

 private:
  std::int64_t bound_;
  std::vector<BigInt> coeffs_;
};

}  // namespace areawalk::detail
