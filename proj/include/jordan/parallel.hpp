#pragma once

#include <exception>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jordan {

/// Execution mode for the batch kernels. `serial` is the reference path;
/// `parallel` runs the same per-slot work under OpenMP. Both produce
/// identical results: every slot derives its inputs from its own seed and
/// writes only to its own output, and aggregation is an ordered reduction
/// over the slots.
enum class ExecMode { serial, parallel };

inline ExecMode parse_exec_mode(const std::string& s) {
  if (s == "serial") return ExecMode::serial;
  if (s == "parallel") return ExecMode::parallel;
  throw std::invalid_argument("unknown exec mode: " + s);
}

inline const char* exec_mode_name(ExecMode m) {
  return m == ExecMode::parallel ? "parallel" : "serial";
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// Runs body(0), ..., body(n-1). In parallel mode exceptions are captured
/// per slot and the lowest-index one is rethrown after the loop, matching
/// what the serial path would have thrown first.
template <typename F>
void parallel_for(int n, ExecMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel && n > 1) {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace jordan
