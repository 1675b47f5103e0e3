#pragma once

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>

namespace cfweno {

// Threads for a parallel region: an explicit request wins, then the
// CFWENO_THREADS environment variable, then the OpenMP default.
inline int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CFWENO_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

// Captures the first exception thrown inside an OpenMP loop body so it can be
// rethrown after the region.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) {
    if (failed_.load(std::memory_order_relaxed)) return;
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = std::current_exception();
      failed_.store(true, std::memory_order_relaxed);
    }
  }

  void rethrow() {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::atomic<bool> failed_{false};
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace cfweno
