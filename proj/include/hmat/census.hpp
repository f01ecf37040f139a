#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hmat {

using BigInt = boost::multiprecision::cpp_int;

// Factorial capacity of the closed-form row count.
inline constexpr int kMaxFormulaK = 8;
// Capacity of the selection binomial C(formula_p(k), 4k-2).
inline constexpr int kMaxSelectionK = 4;
// Capacity of the whole-population inner-product histogram.
inline constexpr int kMaxHistogramOrder = 12;

BigInt factorial_exact(unsigned n);

// C(n, k) by running product with exact stepwise division.
BigInt binomial_exact(const BigInt& n, unsigned k);

// The published closed form for the number of candidate rows at order
// 4k: (4k-1)! - (2k-1)! - (2k)! + 2, evaluated verbatim. 1 <= k <= 8.
BigInt formula_p(int k);

// C(formula_p(k), 4k-2): the number of ways to pick the remaining rows
// from the closed-form pool, ignoring orthogonality. 1 <= k <= 4.
BigInt selection_count(int k);

// Independent count of distinct length-(4k-1) sign rows with exactly
// 2k-1 entries of +1. For k <= 4 all 2^(4k-1) vectors are enumerated
// and checked against C(4k-1, 2k-1); beyond that the binomial is
// returned directly. k >= 1.
BigInt oracle_row_count(int k);

// Inner products over all ordered pairs of balanced length-n vectors
// (n even, n <= 12). Support is exactly {4k - n : 0 <= k <= n/2}; for
// n = 2 mod 4 there is no mass at zero.
std::map<int, std::uint64_t> orthogonal_pair_histogram(int n);

// Side-by-side audit of the closed form against the combinatorial
// truth, with discrepancy notes. 1 <= k <= 4.
struct CensusReport {
  int k = 0;
  BigInt formula_p;
  BigInt oracle_row_count;
  BigInt selection_count;
  std::vector<std::string> notes;
};

CensusReport census_report(int k);

}  // namespace hmat
