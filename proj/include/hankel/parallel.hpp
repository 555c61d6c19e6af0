#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hankel::detail {

/// Worker count for grid and sampling sweeps: HANKEL_VERIFY_THREADS when set
/// (clamped to >= 1), otherwise the available hardware parallelism.
inline unsigned worker_count() {
  if (const char* env = std::getenv("HANKEL_VERIFY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Splits [0,n) into contiguous chunks, evaluates `chunk(begin, end)` on each
/// (possibly on separate threads) and merges the partial results in chunk
/// order, so the outcome is independent of the number of workers.
template <class T, class ChunkFn, class MergeFn>
T parallel_reduce(std::size_t n, ChunkFn&& chunk, MergeFn&& merge) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) return chunk(std::size_t{0}, n);

  std::vector<T> partial;
  partial.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) partial.emplace_back();
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&partial, &chunk, w, begin, end] {
      if (begin < end) partial[w] = chunk(begin, end);
    });
  }
  for (auto& t : pool) t.join();

  T out = partial[0];
  for (std::size_t w = 1; w < workers; ++w) {
    if (w * step < n) out = merge(out, partial[w]);
  }
  return out;
}

}  // namespace hankel::detail
