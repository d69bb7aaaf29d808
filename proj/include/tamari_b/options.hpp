#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace tamari_b {

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

// Internal consistency checks between independent computations; on by
// default in builds without NDEBUG.
inline std::atomic<bool>& crosscheck_flag() {
#ifdef NDEBUG
  static std::atomic<bool> on{false};
#else
  static std::atomic<bool> on{true};
#endif
  return on;
}

inline bool crosschecks_enabled() { return crosscheck_flag().load(); }
inline void set_crosschecks(bool on) { crosscheck_flag().store(on); }

inline void check_cap(std::size_t required, EnumerationOptions const& opt) {
  if (required > opt.cap) {
    throw CapExceeded(required, opt.cap);
  }
}

// Calls fn(k) for k in [0, count) on up to `threads` workers. Each k is
// handled exactly once; the first exception is rethrown after joining.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  unsigned const workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::mutex m;
  std::size_t next = 0;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(m);
        if (next >= count || error) return;
        k = next++;
      }
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(m);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tamari_b
