#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace sosf::detail {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Splits [0, total) into at most `jobs` contiguous chunks and runs
/// fn(chunk_index, begin, end) per chunk, each on its own thread. Chunk
/// boundaries depend only on (total, jobs), so callers can merge per-chunk
/// results in chunk order and get schedule-independent output.
template <typename Fn>
int run_chunked(long long total, int jobs, Fn&& fn) {
  jobs = resolve_jobs(jobs);
  long long chunks = std::min<long long>(jobs, std::max<long long>(total, 1));
  if (chunks <= 1) {
    fn(0, 0, total);
    return 1;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(chunks));
  long long per = total / chunks;
  long long rem = total % chunks;
  long long begin = 0;
  for (long long c = 0; c < chunks; ++c) {
    long long len = per + (c < rem ? 1 : 0);
    long long end = begin + len;
    workers.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
    begin = end;
  }
  for (auto& w : workers) w.join();
  return static_cast<int>(chunks);
}

}  // namespace sosf::detail
