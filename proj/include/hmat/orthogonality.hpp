#pragma once

#include <cstdint>
#include <string>

#include "hmat/sign_vector.hpp"

namespace hmat {

// Residue class of an order n modulo 4.
enum class OrderKind { Odd, TwiceOdd, DivisibleByFour };

enum class Verdict { Impossible, PossibleCandidate, ExistsTrivially };

// Classification of an order: whether a Hadamard matrix of that order
// can exist, and why.
struct OrderClass {
  int order;
  OrderKind kind;
  Verdict verdict;
  std::string reason;
};

const char* to_string(OrderKind kind);
const char* to_string(Verdict verdict);

// The two-half model of a balanced row pair: one row arranged as n/2
// entries of +1 followed by n/2 entries of -1, the other described by
// its +1 overlap count k against the first half.
class BalancedHalfModel {
 public:
  // Requires n even and 0 <= k <= n/2.
  BalancedHalfModel(int n, int k);

  int order() const { return n_; }
  int half() const { return n_ / 2; }
  int overlap_count() const { return k_; }

  // The inner product the model predicts: 4k - n.
  int predicted_inner_product() const { return 4 * k_ - n_; }

  // True when n = 2 * n1 with n1 odd (so n1 = 2*ell + 1).
  bool twice_odd_form() const { return n_ % 4 == 2; }

  // The ell with n/2 = 2*ell + 1; only defined in twice-odd form.
  int ell() const;

 private:
  int n_;
  int k_;
};

// Predicted inner product of two balanced rows of even order n whose
// +1 sets intersect in k positions: 4k - n.
int predicted_orthogonal_number(int n, int k);

// Same prediction for n = 2*(2*ell + 1), parameterized by ell:
// 4k - 4*ell - 2. Always congruent to 2 mod 4, hence never zero.
int twice_odd_orthogonal_number(int ell, int k);

// Classify n by its residue mod 4: odd and twice-odd orders cannot
// carry a Hadamard matrix (orders 1 and 2 are the trivial exceptions);
// multiples of 4 are candidates whose existence is settled only
// constructively.
OrderClass classify_order(int n);

// Both sides of the overlap law g = 4k - n evaluated on a concrete
// pair of balanced rows.
struct OverlapLawCheck {
  std::int64_t g_actual;
  std::size_t overlap_count;
  std::int64_t g_predicted;
  bool agrees;
};

// Evaluate the law on two balanced rows of the same even length.
// Rejects unbalanced or odd-length input (naming the offending row)
// rather than reporting a spurious disagreement.
OverlapLawCheck check_overlap_law(const SignVector& u, const SignVector& v);

}  // namespace hmat
