#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace areawalk {

/// Resolves a requested thread count; 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

inline std::uint64_t split_point(std::uint64_t count, unsigned index, unsigned parts) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * index / parts);
}

/// Splits [0, count) into contiguous chunks and runs fn(begin, end, chunk)
/// on up to `threads` workers. Returns one result per chunk, in chunk order,
/// so callers can merge deterministically. Exceptions are rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count)));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = fn(std::uint64_t{0}, count, 0u);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = split_point(count, w, workers);
      const std::uint64_t end = split_point(count, w + 1, workers);
      pool.emplace_back([&, w, begin, end] {
        try {
          results[w] = fn(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace areawalk
