#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace recdiv::detail {

// Splits [begin, end) into `workers` contiguous blocks and runs
// fn(block_begin, block_end, worker_index) on each, one thread per block.
// The first exception thrown by a worker is rethrown after all joined.
template <typename Fn>
void parallel_blocks(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn&& fn) {
  if (end <= begin) return;
  const std::uint64_t span = end - begin;
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, span)));
  if (workers == 1) {
    fn(begin, end, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + span * w / workers;
    const std::uint64_t hi = begin + span * (w + 1) / workers;
    threads.emplace_back([&, lo, hi, w] {
      try {
        fn(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace recdiv::detail
