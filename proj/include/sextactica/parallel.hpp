#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sextactica {

/// Worker count: SEXTACTICA_THREADS wins over `requested`, which wins over
/// the hardware concurrency. Always at least 1.
inline unsigned resolve_thread_count(unsigned requested = 0) {
  if (const char* env = std::getenv("SEXTACTICA_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs body(chunk) for chunk in [0, n_chunks) on `threads` workers. Each
/// chunk writes only its own output slot, so callers merge in chunk order
/// and get results independent of the worker count.
template <class Body>
void for_each_chunk(std::size_t n_chunks, unsigned threads, Body&& body, const ProgressFn& progress = {}) {
  std::atomic<std::size_t> next{0}, done{0};
  std::exception_ptr failure;
  std::mutex failure_mu, progress_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(n_chunks);
        return;
      }
      std::size_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(progress_mu);
        progress(d, n_chunks);
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n_chunks, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sextactica
