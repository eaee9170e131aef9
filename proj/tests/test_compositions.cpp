#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "areawalk/compositions.hpp"

using namespace areawalk;

namespace {

std::vector<std::vector<int>> collect(int n) {
  std::vector<std::vector<int>> out;
  for (const Composition& c : compositions(n)) out.emplace_back(c.parts().begin(), c.parts().end());
  return out;
}

// Independent recursive listing of all compositions of n.
void brute_compositions(int remaining, std::vector<int>& prefix, std::set<std::vector<int>>& out) {
  if (remaining == 0) {
    out.insert(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    brute_compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST(Compositions, SmallCases) {
  EXPECT_EQ(collect(1), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(collect(3), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}}));
  EXPECT_EQ(collect(10).size(), 512u);
}

TEST(Compositions, EachExactlyOnce) {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::vector<int>> expected;
    std::vector<int> prefix;
    brute_compositions(n, prefix, expected);
    const auto listed = collect(n);
    EXPECT_EQ(listed.size(), composition_count(n));
    EXPECT_EQ(std::set<std::vector<int>>(listed.begin(), listed.end()), expected) << "n=" << n;
    for (const auto& parts : listed) EXPECT_EQ(std::accumulate(parts.begin(), parts.end(), 0), n);
  }
}

TEST(Compositions, OrderIsDeterministic) { EXPECT_EQ(collect(9), collect(9)); }

TEST(Compositions, RejectsInvalid) {
  EXPECT_THROW(compositions(0), std::invalid_argument);
  EXPECT_THROW(composition_count(-2), std::invalid_argument);
  EXPECT_THROW(composition_count(kMaxCompositionTotal + 1), std::invalid_argument);
  EXPECT_THROW(Composition({}), std::invalid_argument);
  EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(composition_from_mask(3, 4), std::out_of_range);
}

TEST(Binomial, OutOfRangeVanishes) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(ClusterCoeff, Examples) {
  EXPECT_EQ(cluster_coeff(Composition({1})), ExactRational(1));
  EXPECT_EQ(cluster_coeff(Composition({2})), ExactRational(1, 2));
  EXPECT_EQ(cluster_coeff(Composition({1, 1})), ExactRational(1));
}

TEST(ClusterCoeffAlt, Examples) {
  EXPECT_EQ(cluster_coeff_alt(Composition({2, 1})), ExactRational(1));
  EXPECT_EQ(cluster_coeff_alt(Composition({1, 2})), ExactRational(1));
  EXPECT_EQ(cluster_coeff_alt(Composition({1})), ExactRational(1));
}

TEST(ClusterCoeffBar, Examples) {
  EXPECT_EQ(cluster_coeff_bar(1, {}), ExactRational(1));
  EXPECT_EQ(cluster_coeff_bar(2, {}), ExactRational(1, 3));
  const std::vector<int> one{1};
  EXPECT_EQ(cluster_coeff_bar(1, one), ExactRational(1));
  EXPECT_THROW(cluster_coeff_bar(0, {}), std::invalid_argument);
}

TEST(ClusterCoeff, BothProductFormsAgree) {
  for (int n = 1; n <= 12; ++n) {
    for (const Composition& c : compositions(n)) EXPECT_EQ(cluster_coeff(c), cluster_coeff_alt(c));
  }
}

TEST(ClusterCoeff, PeriodicPathCountsAreIntegers) {
  for (int n = 1; n <= 12; ++n) {
    for (const Composition& c : compositions(n)) {
      const ExactRational scaled = ExactRational(2 * n) * cluster_coeff(c);
      EXPECT_TRUE(scaled.is_integer());
      EXPECT_GT(scaled.numerator(), 0);

      const auto rest = c.parts().subspan(1);
      const ExactRational bar = ExactRational(2 * n - 1) * cluster_coeff_bar(c[0], rest);
      EXPECT_TRUE(bar.is_integer());
      EXPECT_GT(bar.numerator(), 0);
    }
  }
}

// 2n c(l) counts cyclic index sequences of length 2n touching 0 with the
// given per-level transition counts; check that against a direct count of
// closed +-1 index paths for small n.
TEST(ClusterCoeff, CountsPeriodicIndexPaths) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, long> counted;
    const int len = 2 * n;
    for (unsigned moves = 0; moves < (1u << len); ++moves) {
      for (int start = 0; start <= n; ++start) {
        int level = start, lowest = start;
        std::vector<int> per_level(static_cast<std::size_t>(3 * n + 2), 0);
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
          const bool up = (moves >> i) & 1u;
          const int next = up ? level + 1 : level - 1;
          if (next < 0) ok = false;
          else ++per_level[static_cast<std::size_t>(std::max(level, next))];
          level = next;
          lowest = std::min(lowest, level);
        }
        if (!ok || level != start || lowest != 0) continue;
        std::vector<int> parts;
        for (int i = 1; i <= n && per_level[static_cast<std::size_t>(i)] > 0; ++i) parts.push_back(per_level[static_cast<std::size_t>(i)] / 2);
        ++counted[parts];
      }
    }
    for (const Composition& c : compositions(n)) {
      const std::vector<int> key(c.parts().begin(), c.parts().end());
      const ExactRational expected = ExactRational(2 * n) * cluster_coeff(c);
      EXPECT_EQ(BigInt(counted[key]), expected.numerator()) << "n=" << n;
    }
  }
}
