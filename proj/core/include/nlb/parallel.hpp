#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace nlb {

/// Scans indices [0, total) and returns the smallest index for which probe
/// yields a value, together with that value.
///
/// Workers claim fixed-size blocks in increasing order and stop once their
/// block starts past the best index found so far. The result is the
/// enumeration-minimal hit regardless of scheduling. probe must be safe to call
/// concurrently.
template <class Result, class Probe>
std::optional<std::pair<std::uint64_t, Result>> first_violation(std::uint64_t total,
                                                                unsigned workers, Probe&& probe) {
  if (workers <= 1 || total < 2) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (std::optional<Result> r = probe(i)) return std::pair{i, std::move(*r)};
    }
    return std::nullopt;
  }

  constexpr std::uint64_t kBlock = 64;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{total};
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, Result>> found;
  std::exception_ptr error;

  auto work = [&] {
    try {
      while (true) {
        const std::uint64_t start = next_block.fetch_add(1) * kBlock;
        if (start >= std::min(total, best.load())) return;
        const std::uint64_t stop = std::min(total, start + kBlock);
        for (std::uint64_t i = start; i < stop; ++i) {
          if (i >= best.load()) return;
          if (std::optional<Result> r = probe(i)) {
            std::lock_guard lock(mu);
            if (i < best.load()) {
              best.store(i);
              found.emplace(i, std::move(*r));
            }
            return;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, (total + kBlock - 1) / kBlock));
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return found;
}

/// Applies fn to every index in [0, total) on up to `workers` threads and
/// returns the results in index order.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::uint64_t total, unsigned workers, Fn&& fn) {
  std::vector<std::optional<Result>> slots(total);
  if (workers <= 1 || total < 2) {
    for (std::uint64_t i = 0; i < total; ++i) slots[i].emplace(fn(i));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    std::exception_ptr error;
    auto work = [&] {
      try {
        for (std::uint64_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
          slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next.store(total);
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<Result> out;
  out.reserve(total);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace nlb
