#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wordmap {

// WORDMAP_THREADS caps the worker count; default is the hardware concurrency.
inline std::size_t worker_count() {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WORDMAP_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<std::size_t>(hw, static_cast<std::size_t>(v));
  }
  return hw;
}

// Runs f(i) for i in [0, n); results must be written to disjoint slots.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::mutex m;
  std::size_t next = 0;
  std::exception_ptr err;
  auto run = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(m);
        if (next >= n || err) return;
        i = next++;
      }
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace wordmap
