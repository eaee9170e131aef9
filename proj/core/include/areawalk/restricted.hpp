#pragma once

#include <cstdint>

#include "areawalk/compositions.hpp"
#include "areawalk/laurent.hpp"

namespace areawalk {

/// Target line k + l = c for walks starting at the origin. Negative offsets
/// are folded onto |c| by the pi rotation, which preserves area.
class ParadiagonalSpec {
 public:
  explicit ParadiagonalSpec(std::int64_t offset) : offset_(offset) {}

  std::int64_t offset() const { return offset_; }
  std::int64_t canonical() const { return offset_ < 0 ? -offset_ : offset_; }
  bool is_even() const { return canonical() % 2 == 0; }
  /// I with canonical() == 2I (even) or 2I + 1 (odd).
  std::int64_t index() const { return canonical() / 2; }

 private:
  std::int64_t offset_;
};

/// How the paradiagonal composition sums are reported.
enum class LineNormalization {
  /// Walks ending on the single line k + l = c.
  single_line,
  /// The composition sum as written with the (l_I + l_{I+1}) path weights. For
  /// c != 0 it counts the mirrored pair of lines {c, -c}, i.e. twice the
  /// single line.
  paired_lines,
};

/// Generating function of length-2n walks ending on k + l = 0.
AreaPolynomial gf_diagonal(int n, unsigned threads = 0);

/// Explicit binomial multi-sum for the coefficient of Q^t in gf_diagonal(n).
BigInt count_diagonal(int n, std::int64_t doubled_area);

/// Length-2n walks ending on k + l = 2I. Empty when I > n.
AreaPolynomial gf_paradiagonal_even(int n, int I, LineNormalization norm = LineNormalization::single_line,
                                    unsigned threads = 0);

/// Length-(2n-1) walks ending on k + l = 2I + 1. Empty when I > n - 1.
AreaPolynomial gf_paradiagonal_odd(int n, int I, LineNormalization norm = LineNormalization::single_line,
                                   unsigned threads = 0);

/// Walks of n_steps ending on k + l = c, any sign of c. Lines beyond reach
/// (|c| > n_steps) give the empty polynomial; a reachable offset whose parity
/// differs from n_steps throws std::invalid_argument.
AreaPolynomial gf_line(int n_steps, std::int64_t c, unsigned threads = 0);

/// Number of index paths starting and ending at level I for a composition
/// (l_1..l_j) of an even-length trace, divided by c(l_1..l_j): l_I + l_{I+1}
/// with l_0 = l_{j+1} = 0.
int paradiagonal_weight_even(const Composition& c, int I);

/// Same for odd length, with parts (l_0, l_1, ..., l_j): 2 l_0 - 1 + l_1 for
/// I = 0 and l_I + l_{I+1} otherwise.
int paradiagonal_weight_odd(const Composition& c, int I);

/// True when the line generating functions over every reachable c sum to
/// gf_open(n_steps).
bool sum_over_lines_check(int n_steps, unsigned threads = 0);

}  // namespace areawalk
