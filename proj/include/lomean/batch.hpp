#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace lomean {

/// Trial execution mode. Serial is the reference implementation; Parallel
/// fans independent trials out over OpenMP threads. Every trial derives all
/// randomness from (seed, index), so the two modes produce identical results
/// and the serial path stays usable as the oracle for the parallel one.
enum class ExecMode { Serial, Parallel };

namespace detail {

template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn) {
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic, 4) shared(first_error)
  for (long long i = static_cast<long long>(begin); i < static_cast<long long>(end); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
template <class R, class Fn>
std::vector<R> run_indexed(std::size_t n, ExecMode mode, Fn&& fn) {
  std::vector<R> out(n);
  if (mode == ExecMode::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  } else {
    detail::parallel_for(0, n, [&](std::size_t i) { out[i] = fn(i); });
  }
  return out;
}

/// Chunked first-hit search: trials are processed in fixed-size chunks
/// (parallel inside a chunk in Parallel mode) and the scan stops after the
/// first chunk that contains a hit. Both modes cover exactly the same trials,
/// so reported trial counts and lowest-index hits match between them.
/// Returns {lowest hit index or -1, trials evaluated}.
template <class Fn>
std::pair<long long, std::size_t> run_until_hit(std::size_t n, ExecMode mode, std::size_t chunk,
                                                Fn&& fn) {
  if (chunk == 0) chunk = 1;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(begin + chunk, n);
    std::vector<char> hits(end - begin, 0);
    if (mode == ExecMode::Serial) {
      for (std::size_t i = begin; i < end; ++i) hits[i - begin] = fn(i) ? 1 : 0;
    } else {
      detail::parallel_for(begin, end, [&](std::size_t i) { hits[i - begin] = fn(i) ? 1 : 0; });
    }
    for (std::size_t i = begin; i < end; ++i)
      if (hits[i - begin]) return {static_cast<long long>(i), end};
  }
  return {-1, n};
}

}  // namespace lomean
