#pragma once

#include <cstdint>

#include "areawalk/laurent.hpp"

namespace areawalk {

/// Number of unit steps of an open walk; parity selects the even or odd
/// composition sum.
class WalkLength {
 public:
  /// Throws std::invalid_argument for n_steps < 1.
  explicit WalkLength(int n_steps);

  int steps() const { return steps_; }
  bool is_even() const { return steps_ % 2 == 0; }
  /// n such that steps() == 2n (even) or 2n - 1 (odd).
  int half() const { return (steps_ + 1) / 2; }

 private:
  int steps_;
};

/// Area generating function of all open walks of length 2n, summed over
/// compositions of n. threads = 0 uses hardware concurrency.
AreaPolynomial gf_open_even(int n, unsigned threads = 0);

/// Area generating function of all open walks of length 2n - 1.
AreaPolynomial gf_open_odd(int n, unsigned threads = 0);

/// Dispatches on the parity of n_steps.
AreaPolynomial gf_open(int n_steps, unsigned threads = 0);
AreaPolynomial gf_open(WalkLength length, unsigned threads = 0);

/// Number of length-2n walks with doubled area t, evaluated from the explicit
/// binomial multi-sum (not by expanding the generating function).
BigInt count_open_even(int n, std::int64_t doubled_area);

/// Number of length-(2n-1) walks with (integer) area A, from the explicit
/// binomial multi-sum.
BigInt count_open_odd(int n, std::int64_t area);

}  // namespace areawalk
