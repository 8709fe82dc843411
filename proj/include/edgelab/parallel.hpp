#pragma once

// Chunked parallel execution. Work is split into a fixed number of chunks
// (independent of worker count); workers pull chunks off an atomic counter.
// Results that depend on the chunk index (per-chunk RNG streams, per-chunk
// partial histograms merged in chunk order) are therefore identical no
// matter how many workers run, which is what makes LAB_WORKERS a pure
// throughput knob.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace edgelab {

inline constexpr std::size_t kMcChunks = 512;

inline unsigned worker_count() {
  if (const char* env = std::getenv("LAB_WORKERS")) {
    long w = std::atol(env);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

template <typename F>
void parallel_chunks(std::size_t n_chunks, F&& body) {
  unsigned workers = worker_count();
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      body(c);
    }
  };
  std::vector<std::thread> pool;
  unsigned k = std::min<std::size_t>(workers, n_chunks);
  pool.reserve(k);
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

// Splits `total` items into `chunks` contiguous ranges of near-equal size.
inline std::pair<std::size_t, std::size_t> chunk_range(std::size_t total, std::size_t chunks,
                                                       std::size_t c) {
  std::size_t base = total / chunks, rem = total % chunks;
  std::size_t lo = c * base + std::min(c, rem);
  std::size_t len = base + (c < rem ? 1 : 0);
  return {lo, lo + len};
}

}  // namespace edgelab
