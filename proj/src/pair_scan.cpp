#include "hmat/pair_scan.hpp"

#include <bit>
#include <string>
#include <vector>

#include "hmat/errors.hpp"
#include "hmat/search.hpp"

namespace hmat {

namespace {

std::vector<std::uint64_t> balanced_population(int n) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("pair scan needs a positive even order, got " +
                      std::to_string(n));
  if (n > kMaxScanOrder)
    throw CapacityError("order " + std::to_string(n) +
                        " exceeds the pair-scan capacity of " +
                        std::to_string(kMaxScanOrder));
  std::vector<std::uint64_t> words;
  for (const SignVector& row : enumerate_balanced_rows(n, false))
    words.push_back(row.word(0));
  return words;
}

PairScanResult assemble(int n, std::uint64_t pairs,
                        const std::vector<std::uint64_t>& hist,
                        std::uint64_t violations) {
  PairScanResult result;
  result.order = n;
  result.pair_count = pairs;
  result.law_violations = violations;
  for (int slot = 0; slot < static_cast<int>(hist.size()); ++slot) {
    if (hist[static_cast<std::size_t>(slot)] != 0)
      result.histogram[2 * slot - n] = hist[static_cast<std::size_t>(slot)];
  }
  return result;
}

}  // namespace

PairScanResult scan_balanced_pairs_serial(int n) {
  const std::vector<std::uint64_t> words = balanced_population(n);
  const std::size_t m = words.size();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t x = words[i];
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t y = words[j];
      const int g = n - 2 * std::popcount(x ^ y);
      const int k = std::popcount(x & y);
      ++hist[static_cast<std::size_t>((g + n) / 2)];
      if (g != 4 * k - n) ++violations;
    }
  }
  return assemble(n, static_cast<std::uint64_t>(m) * m, hist, violations);
}

PairScanResult scan_balanced_pairs_parallel(int n) {
  const std::vector<std::uint64_t> words = balanced_population(n);
  const std::size_t m = words.size();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t violations = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<std::uint64_t> local(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t local_violations = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(m); ++i) {
      const std::uint64_t x = words[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t y = words[j];
        const int g = n - 2 * std::popcount(x ^ y);
        const int k = std::popcount(x & y);
        ++local[static_cast<std::size_t>((g + n) / 2)];
        if (g != 4 * k - n) ++local_violations;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (std::size_t slot = 0; slot < hist.size(); ++slot)
        hist[slot] += local[slot];
      violations += local_violations;
    }
  }
  return assemble(n, static_cast<std::uint64_t>(m) * m, hist, violations);
}

PairScanResult scan_balanced_pairs(int n, bool parallel) {
  return parallel ? scan_balanced_pairs_parallel(n)
                  : scan_balanced_pairs_serial(n);
}

}  // namespace hmat
