#pragma once

// Minimal fork-join helpers for exhaustive sweeps. The worker count is
// capped by the LPM_THREADS environment variable. Results never depend on
// the number of workers.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lpm {

inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LPM_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return hw;
}

/// Calls body(i) for every i in [0, count), in contiguous shards.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  const std::size_t shard = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * shard, hi = std::min(count, lo + shard);
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Conjunction of pred(i) over [0, count); stops early once a shard fails.
template <class Pred>
bool parallel_all_of(std::size_t count, Pred&& pred) {
  std::atomic<bool> ok{true};
  parallel_for(count, [&](std::size_t i) {
    if (ok.load(std::memory_order_relaxed) && !pred(i)) ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

}  // namespace lpm
