#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wbirkhoff {

struct ExecutionOptions {
  unsigned threads = 1;
};

// Runs fn(begin, end) over a fixed partition of [0, count). The partition
// does not depend on the thread count, so per-item results are identical
// however many threads run them.
template <class Fn>
void parallel_chunks(std::size_t count, const ExecutionOptions& opts, Fn&& fn) {
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(count)));
  if (threads <= 1 || count <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t per = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t b = t * per, e = std::min(count, b + per);
    if (b >= e) break;
    pool.emplace_back([&, t, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace wbirkhoff
