#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace belyi {

/// Sets the OpenMP team size for subsequent parallel kernels (0 keeps the default).
inline void set_worker_count(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// results[i] = trial(i) for i in [0, count), computed across the OpenMP team.
/// Results land by index, so the output never depends on scheduling.
template <typename Result, typename Trial>
std::vector<Result> map_trials(std::uint64_t count, Trial&& trial) {
  std::vector<Result> results(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
    results[static_cast<std::size_t>(i)] = trial(static_cast<std::uint64_t>(i));
  return results;
}

/// Reference loop for map_trials.
template <typename Result, typename Trial>
std::vector<Result> map_trials_serial(std::uint64_t count, Trial&& trial) {
  std::vector<Result> results;
  results.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) results.push_back(trial(i));
  return results;
}

}  // namespace belyi
