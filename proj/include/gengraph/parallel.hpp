#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace gengraph {

/// Evaluates fn(i) for every i in [first, last] on a small worker pool and
/// returns the results in ascending i, whatever order they finish in.
/// The first exception thrown by any call is rethrown on the caller's thread.
template <typename Fn>
auto ordered_parallel_map(std::uint64_t first, std::uint64_t last, Fn&& fn,
                          unsigned threads = 0) {
  using Result = decltype(fn(first));
  if (last < first) return std::vector<Result>{};
  const std::size_t count = last - first + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(first + i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  std::vector<Result> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace gengraph
