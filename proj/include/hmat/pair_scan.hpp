#pragma once

#include <cstdint>
#include <map>

namespace hmat {

// Capacity guard for whole-population pair scans (C(n, n/2)^2 pairs).
inline constexpr int kMaxScanOrder = 18;

// Census of all ordered pairs (x, y) of balanced length-n sign vectors:
// histogram maps each inner product to its pair count, law_violations
// counts pairs whose inner product differs from 4k - n where k is the
// number of shared +1 positions. Self-pairs are included (g = n).
struct PairScanResult {
  int order = 0;
  std::uint64_t pair_count = 0;
  std::map<int, std::uint64_t> histogram;
  std::uint64_t law_violations = 0;
};

// Single-threaded reference kernel.
PairScanResult scan_balanced_pairs_serial(int n);

// Same census computed with one thread-local histogram per thread,
// merged at the end; result is identical to the serial kernel.
PairScanResult scan_balanced_pairs_parallel(int n);

PairScanResult scan_balanced_pairs(int n, bool parallel);

}  // namespace hmat
