#include "areawalk/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "areawalk/parallel.hpp"

namespace areawalk {

namespace {

constexpr int kPrefixSteps = 8;

using u128 = unsigned __int128;

void check_length(int n_steps, int cap, int hard_limit, const char* what) {
  if (n_steps < 1) throw std::invalid_argument(std::string(what) + ": walk length must be >= 1");
  if (cap < 1) throw std::invalid_argument(std::string(what) + ": cap must be positive");
  if (n_steps > cap) {
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n_steps) + " exceeds cap " +
                                std::to_string(cap));
  }
  if (n_steps > hard_limit) {
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n_steps) +
                                " exceeds hard limit " + std::to_string(hard_limit));
  }
}

// (dx, dy) per Step value.
constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

// Area increment x*y' - x'*y of a step from (x, y).
constexpr std::int64_t step_increment(Step s, std::int64_t x, std::int64_t y) {
  switch (s) {
    case Step::R: return -y;
    case Step::L: return y;
    case Step::U: return x;
    case Step::D: return -x;
  }
  return 0;
}

// |t| <= sum_{m<n} m, since a step taken from |x|+|y| <= m changes t by at most m.
std::int64_t area_bound(int n_steps) { return static_cast<std::int64_t>(n_steps) * (n_steps - 1) / 2; }

BigInt to_bigint(u128 v) {
  BigInt out = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return out;
}

class BruteCounter {
 public:
  BruteCounter(int n_steps)
      : n_(n_steps),
        t_bound_(area_bound(n_steps)),
        side_(2 * n_steps + 1),
        t_span_(2 * t_bound_ + 1),
        counts_(static_cast<std::size_t>(side_) * side_ * t_span_, 0) {}

  void sweep(int x, int y, std::int64_t t, int remaining) {
    if (remaining == 0) {
      ++counts_[index(x, y, t)];
      return;
    }
    sweep(x + 1, y, t - y, remaining - 1);
    sweep(x - 1, y, t + y, remaining - 1);
    sweep(x, y + 1, t + x, remaining - 1);
    sweep(x, y - 1, t - x, remaining - 1);
  }

  void merge(const BruteCounter& other) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  }

  EndpointHistogram to_histogram() const {
    EndpointHistogram::Map map;
    for (int x = -n_; x <= n_; ++x) {
      for (int y = -n_; y <= n_; ++y) {
        AreaPolynomial::Terms terms;
        for (std::int64_t t = -t_bound_; t <= t_bound_; ++t) {
          const std::uint64_t c = counts_[index(x, y, t)];
          if (c != 0) terms.emplace_hint(terms.end(), t, BigInt(static_cast<unsigned long>(c)));
        }
        if (!terms.empty()) map.emplace(Endpoint{x, y}, AreaPolynomial(std::move(terms)));
      }
    }
    return EndpointHistogram(n_, std::move(map));
  }

 private:
  std::size_t index(int x, int y, std::int64_t t) const {
    return (static_cast<std::size_t>(x + n_) * side_ + static_cast<std::size_t>(y + n_)) * t_span_ +
           static_cast<std::size_t>(t + t_bound_);
  }

  int n_;
  std::int64_t t_bound_;
  std::size_t side_;
  std::size_t t_span_;
  std::vector<std::uint64_t> counts_;
};

// Area polynomial of one DP cell with 128-bit counters on [lo, lo + size).
struct DpCell {
  std::int64_t lo = 0;
  std::vector<u128> counts;

  bool empty() const { return counts.empty(); }
  std::int64_t hi() const { return lo + static_cast<std::int64_t>(counts.size()) - 1; }
};

}  // namespace

Walk Walk::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'R': steps.push_back(Step::R); break;
      case 'L': steps.push_back(Step::L); break;
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      default: throw std::invalid_argument(std::string("walk step must be one of RLUD, got '") + ch + "'");
    }
  }
  return Walk(std::move(steps));
}

std::string Walk::to_string() const {
  static constexpr char kNames[4] = {'R', 'L', 'U', 'D'};
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(kNames[static_cast<int>(s)]);
  return out;
}

std::int64_t radial_double_area(const Walk& walk) {
  std::int64_t x = 0, y = 0, t = 0;
  for (Step s : walk.steps()) {
    t += step_increment(s, x, y);
    x += kDx[static_cast<int>(s)];
    y += kDy[static_cast<int>(s)];
  }
  return t;
}

AreaPolynomial EndpointHistogram::total() const {
  AreaPolynomial sum;
  for (const auto& [e, p] : by_endpoint_) sum += p;
  return sum;
}

EndpointHistogram brute_force(int n_steps, int cap, unsigned threads) {
  check_length(n_steps, cap, kMaxBruteSteps, "brute_force");
  const int prefix_steps = std::min(n_steps, kPrefixSteps);
  const std::uint64_t prefixes = std::uint64_t{1} << (2 * prefix_steps);

  auto partials = parallel_chunks<std::unique_ptr<BruteCounter>>(
      prefixes, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        auto counter = std::make_unique<BruteCounter>(n_steps);
        for (std::uint64_t code = begin; code < end; ++code) {
          std::int64_t x = 0, y = 0, t = 0;
          // First step in the most significant bits keeps R<L<U<D lexicographic order.
          for (int i = 0; i < prefix_steps; ++i) {
            const auto s = static_cast<Step>((code >> (2 * (prefix_steps - 1 - i))) & 3u);
            t += step_increment(s, x, y);
            x += kDx[static_cast<int>(s)];
            y += kDy[static_cast<int>(s)];
          }
          counter->sweep(static_cast<int>(x), static_cast<int>(y), t, n_steps - prefix_steps);
        }
        return counter;
      });
  for (std::size_t i = 1; i < partials.size(); ++i) partials[0]->merge(*partials[i]);
  return partials[0]->to_histogram();
}

EndpointHistogram dp_enumerate(int n_steps, int cap, unsigned threads) {
  check_length(n_steps, cap, kMaxDpSteps, "dp_enumerate");
  const int n = n_steps;
  const int side = 2 * n + 1;
  auto cell_index = [&](int x, int y) { return static_cast<std::size_t>(x + n) * side + static_cast<std::size_t>(y + n); };

  std::vector<DpCell> layer(static_cast<std::size_t>(side) * side);
  layer[cell_index(0, 0)] = DpCell{0, {1}};

  for (int m = 0; m < n; ++m) {
    std::vector<DpCell> next(layer.size());
    const int reach = m + 1;
    // Pull formulation: each target cell reads its four predecessors, so
    // rows of targets are independent.
    parallel_chunks<int>(static_cast<std::uint64_t>(2 * reach + 1), threads,
                         [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                           for (std::uint64_t row = begin; row < end; ++row) {
                             const int x = static_cast<int>(row) - reach;
                             const int y_span = reach - std::abs(x);
                             for (int y = -y_span; y <= y_span; y += 2) {
                               DpCell& target = next[cell_index(x, y)];
                               std::int64_t lo = 0, hi = -1;
                               bool any = false;
                               for (int s = 0; s < 4; ++s) {
                                 const int px = x - kDx[s], py = y - kDy[s];
                                 if (std::abs(px) + std::abs(py) > m) continue;
                                 const DpCell& src = layer[cell_index(px, py)];
                                 if (src.empty()) continue;
                                 const std::int64_t inc = step_increment(static_cast<Step>(s), px, py);
                                 const std::int64_t slo = src.lo + inc, shi = src.hi() + inc;
                                 if (!any) {
                                   lo = slo;
                                   hi = shi;
                                   any = true;
                                 } else {
                                   lo = std::min(lo, slo);
                                   hi = std::max(hi, shi);
                                 }
                               }
                               if (!any) continue;
                               target.lo = lo;
                               target.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
                               for (int s = 0; s < 4; ++s) {
                                 const int px = x - kDx[s], py = y - kDy[s];
                                 if (std::abs(px) + std::abs(py) > m) continue;
                                 const DpCell& src = layer[cell_index(px, py)];
                                 if (src.empty()) continue;
                                 const std::int64_t inc = step_increment(static_cast<Step>(s), px, py);
                                 const std::size_t base = static_cast<std::size_t>(src.lo + inc - lo);
                                 for (std::size_t i = 0; i < src.counts.size(); ++i) target.counts[base + i] += src.counts[i];
                               }
                             }
                           }
                           return 0;
                         });
    layer = std::move(next);
  }

  EndpointHistogram::Map map;
  for (int x = -n; x <= n; ++x) {
    for (int y = -n; y <= n; ++y) {
      if (std::abs(x) + std::abs(y) > n) continue;
      const DpCell& cell = layer[cell_index(x, y)];
      AreaPolynomial::Terms terms;
      for (std::size_t i = 0; i < cell.counts.size(); ++i) {
        if (cell.counts[i] != 0) terms.emplace_hint(terms.end(), cell.lo + static_cast<std::int64_t>(i), to_bigint(cell.counts[i]));
      }
      if (!terms.empty()) map.emplace(Endpoint{x, y}, AreaPolynomial(std::move(terms)));
    }
  }
  return EndpointHistogram(n, std::move(map));
}

AreaPolynomial line_gf(const EndpointHistogram& h, std::int64_t c) {
  AreaPolynomial sum;
  for (const auto& [e, p] : h.by_endpoint()) {
    if (e.k + e.l == c) sum += p;
  }
  return sum;
}

AreaPolynomial antiline_gf(const EndpointHistogram& h, std::int64_t c) {
  AreaPolynomial sum;
  for (const auto& [e, p] : h.by_endpoint()) {
    if (e.k - e.l == c) sum += p;
  }
  return sum;
}

AreaPolynomial endpoint_gf(const EndpointHistogram& h, int k, int l) {
  auto it = h.by_endpoint().find(Endpoint{k, l});
  return it == h.by_endpoint().end() ? AreaPolynomial{} : it->second;
}

}  // namespace areawalk
