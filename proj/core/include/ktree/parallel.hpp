#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ktree {

/// Splits [0, total) into fixed chunks handed out to `jobs` workers.
/// fn(begin, end, partial) fills one Partial per chunk; results come back
/// in chunk order regardless of scheduling. The first exception wins.
template <class Partial, class Fn>
std::vector<Partial> run_chunked(std::uint64_t total, int jobs, std::uint64_t chunk, Fn&& fn) {
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<Partial> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c * chunk, std::min(total, (c + 1) * chunk), parts[c]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  const auto width = static_cast<std::uint64_t>(std::max(jobs, 1));
  if (width == 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < std::min(width, chunks); ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return parts;
}

}  // namespace ktree
