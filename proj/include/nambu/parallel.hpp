#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace nambu {

/// Worker count: NAMBU_WORKERS when set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("NAMBU_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, one per worker. `body(worker,
/// begin, end)` must only touch state owned by its worker slot.
template <class Body>
void parallel_chunks(std::int64_t count, Body&& body) {
  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(count, 1)));
  if (workers <= 1) {
    body(0u, std::int64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> threads;
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      threads.emplace_back([&body, &errors, w, begin, end] {
        try {
          body(static_cast<unsigned>(w), begin, end);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks will use for `count` items.
inline unsigned chunk_slots(std::int64_t count) {
  return static_cast<unsigned>(std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(count, 1)));
}

}  // namespace nambu
