#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gg {

/// splitmix64-style hash of (seed, index): every batch item gets an
/// independent, reproducible stream regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct BatchResult {
  int total = 0;
  std::vector<int> failures;  // sorted indices
  bool ok() const { return failures.empty(); }
};

/// Parallel map over [0, count): fn(index, item_seed) -> bool. Items are
/// independent pure computations; the failure list is sorted, so the result
/// is deterministic for a fixed (count, seed).
template <class Fn>
BatchResult run_batch(int count, std::uint64_t seed, Fn&& fn) {
  BatchResult res;
  res.total = count;
  std::vector<char> failed(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i)
    if (!fn(i, mix_seed(seed, static_cast<std::uint64_t>(i)))) failed[i] = 1;
  for (int i = 0; i < count; ++i)
    if (failed[i]) res.failures.push_back(i);
  return res;
}

/// Serial reference with identical semantics; the parallel path must agree
/// with it exactly.
template <class Fn>
BatchResult run_batch_serial(int count, std::uint64_t seed, Fn&& fn) {
  BatchResult res;
  res.total = count;
  for (int i = 0; i < count; ++i)
    if (!fn(i, mix_seed(seed, static_cast<std::uint64_t>(i)))) res.failures.push_back(i);
  return res;
}

}  // namespace gg
