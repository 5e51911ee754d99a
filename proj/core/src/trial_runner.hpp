#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace pacdim::detail {

/// Runs fn(t) for t in [0, trials); schedule-independent because each trial
/// owns its rng stream and writes only its own slot.
template <typename Fn>
void run_trials(int trials, int threads, const Fn& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || trials <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  threads = std::min(threads, trials);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (int t = w; t < trials; t += threads) fn(t);
    });
  }
  for (auto& worker : workers) worker.join();
}

}  // namespace pacdim::detail
