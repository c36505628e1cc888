#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace permrange {

// Splits [0, total) into at most `workers` contiguous ranges and runs
// fn(begin, end, slot) for each, on threads when workers > 1. Slots are
// assigned in range order so callers can merge results deterministically,
// independent of the worker count.
inline void run_partitioned(uint64_t total, int workers,
                            const std::function<void(uint64_t, uint64_t, int)>& fn) {
  if (workers < 1) workers = 1;
  if (workers > 64) workers = 64;
  uint64_t parts = std::min<uint64_t>(static_cast<uint64_t>(workers), total == 0 ? 1 : total);
  if (parts <= 1) {
    fn(0, total, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(parts);
  uint64_t chunk = total / parts;
  uint64_t extra = total % parts;
  uint64_t begin = 0;
  for (uint64_t p = 0; p < parts; ++p) {
    uint64_t end = begin + chunk + (p < extra ? 1 : 0);
    threads.emplace_back([&fn, begin, end, p] { fn(begin, end, static_cast<int>(p)); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace permrange
