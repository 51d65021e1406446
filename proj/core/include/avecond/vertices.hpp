#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "avecond/matrix.hpp"

namespace avecond {

// Sign vectors d in {+1,-1}^n are indexed by a mask: bit (n-1-i) set means
// d_i = -1. Mask order is lexicographic order on d with +1 before -1, so mask 0
// is e and "lexicographically smallest" means "smallest mask".
inline Vector sign_vertex(std::size_t n, std::uint64_t mask) {
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = ((mask >> (n - 1 - i)) & 1U) ? -1.0 : 1.0;
  }
  return d;
}

inline std::uint64_t vertex_count(std::size_t n) { return std::uint64_t{1} << n; }

// Folds map(mask) over all 2^n masks. Work is split into contiguous chunks,
// each folded left to right, and chunk results are combined in mask order, so
// the result does not depend on the thread count as long as combine is
// associative.
template <typename T, typename Map, typename Combine>
T reduce_vertices(std::size_t n, unsigned threads, T init, Map map, Combine combine) {
  const std::uint64_t total = vertex_count(n);
  const auto workers = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, total / 64)));
  if (workers <= 1) {
    T acc = init;
    for (std::uint64_t m = 0; m < total; ++m) acc = combine(std::move(acc), map(m));
    return acc;
  }
  std::vector<T> partial(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        try {
          T acc = init;
          for (std::uint64_t m = lo; m < hi; ++m) acc = combine(std::move(acc), map(m));
          partial[w] = std::move(acc);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = init;
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace avecond
