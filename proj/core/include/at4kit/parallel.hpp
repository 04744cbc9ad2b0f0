#ifndef AT4KIT_PARALLEL_HPP
#define AT4KIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace at4kit {

/// out[i] = fn(i) for i in [0, n), evaluated on up to `jobs` threads.
/// Results keep index order; the first exception thrown is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back(worker);
  pool.clear();
  if (error)
    std::rethrow_exception(error);
  return out;
}

}  // namespace at4kit

#endif  // AT4KIT_PARALLEL_HPP
