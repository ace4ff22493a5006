#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "r2k/report.hpp"

namespace r2k {

/// Knobs shared by every audit.
struct AuditOptions {
  unsigned workers = 1;
  std::size_t max_witnesses = 8;
};

/// Runs check(i, tally) for i in [0, n) split into contiguous chunks, one per
/// worker, and merges the per-chunk tallies in index order. The result does
/// not depend on the worker count.
template <class Check>
CaseTally parallel_tally(std::size_t n, unsigned workers, Check&& check) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<CaseTally> partial(chunks);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) check(i, partial[c]);
  };
  if (chunks == 1) {
    run_chunk(0);
    return std::move(partial[0]);
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        run_chunk(c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  CaseTally total;
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

}  // namespace r2k
