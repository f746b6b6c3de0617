#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

namespace ssq {

// Applies fn to every item on `jobs` worker threads and hands results to sink
// strictly in input order, as soon as each prefix is complete. If fn throws,
// every earlier result is still delivered, the remaining work is abandoned
// and the exception is rethrown on the calling thread.
template <class Item, class Fn, class Sink>
void ordered_parallel_map(const std::vector<Item>& items, unsigned jobs, Fn fn, Sink sink) {
  using Result = decltype(fn(items.front()));
  using Outcome = std::variant<Result, std::exception_ptr>;

  const std::size_t n = items.size();
  if (n == 0) return;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));

  std::vector<std::optional<Outcome>> slots(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= n || cancelled.load()) return;
      Outcome outcome = [&]() -> Outcome {
        try {
          return Outcome(std::in_place_index<0>, fn(items[idx]));
        } catch (...) {
          return Outcome(std::in_place_index<1>, std::current_exception());
        }
      }();
      {
        std::lock_guard lock(mu);
        slots[idx] = std::move(outcome);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < n && !failure; ++i) {
    std::optional<Outcome> outcome;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      outcome = std::move(slots[i]);
      slots[i].reset();
    }
    if (outcome->index() == 1) {
      failure = std::get<1>(*outcome);
      cancelled.store(true);
    } else {
      try {
        sink(items[i], std::get<0>(*outcome));
      } catch (...) {
        failure = std::current_exception();
        cancelled.store(true);
      }
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ssq
