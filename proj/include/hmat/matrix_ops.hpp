#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmat/sign_matrix.hpp"
#include "hmat/sign_vector.hpp"

namespace hmat {

// Largest order accepted by gram/verify_hadamard.
inline constexpr std::size_t kMaxVerifyOrder = 1024;

using GramMatrix = std::vector<std::vector<std::int64_t>>;

// Inner product of two rows: sum of the entrywise products. Computed
// bit-parallel as n - 2 * popcount(u XOR v); always has the parity of n.
std::int64_t inner_product(const SignVector& u, const SignVector& v);

// Number of positions where both vectors carry +1.
std::size_t overlap(const SignVector& u, const SignVector& v);

// True iff the length is even and exactly half the entries are +1
// (equivalently, the entries sum to zero).
bool is_balanced(const SignVector& u);

// Negate columns so the first row is all +1, then negate rows so the
// first column is all +1. Requires a square matrix. Idempotent, and
// preserves the multiset of pairwise |inner products|.
SignMatrix normalize(const SignMatrix& m);

// The r x r matrix of all pairwise row inner products.
GramMatrix gram(const SignMatrix& m);

// One offending row pair found by verify_hadamard: for a != b the
// observed inner product is nonzero; for a == b it differs from n.
struct Violation {
  std::size_t row_a;
  std::size_t row_b;  // row_a <= row_b
  std::int64_t observed;
};

// Outcome of the Gram identity check (H * H^T == n * I).
// is_hadamard holds exactly when the matrix is square, the diagonal is
// constantly n, and no off-diagonal pair has a nonzero inner product.
struct VerificationReport {
  bool is_hadamard;
  std::size_t order;  // column count n
  bool square;
  bool diagonal_ok;
  std::optional<Violation> first_violation;
};

// Check the Gram identity. Non-square input yields a negative report
// (square flag cleared), not an error. first_violation, when present,
// is the lexicographically smallest offending pair (a, b) with a <= b.
// Orders beyond kMaxVerifyOrder raise CapacityError.
VerificationReport verify_hadamard(const SignMatrix& m);

}  // namespace hmat
