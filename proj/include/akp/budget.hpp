#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "akp/errors.hpp"

namespace akp {

// Cooperative wall-clock budget, polled from long loops.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    d.limited_ = true;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const { return limited_ && std::chrono::steady_clock::now() > end_; }
  void check(const std::string& where) const {
    if (expired()) throw BudgetError(where + ": wall-clock budget exhausted");
  }

 private:
  bool limited_ = false;
  std::chrono::steady_clock::time_point end_{};
};

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// handled by exactly one worker; callers store results by index so the
// outcome does not depend on scheduling. The first exception is rethrown.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace akp
