#include "hmat/orthogonality.hpp"

#include "hmat/errors.hpp"
#include "hmat/matrix_ops.hpp"

namespace hmat {

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Odd: return "Odd";
    case OrderKind::TwiceOdd: return "TwiceOdd";
    case OrderKind::DivisibleByFour: return "DivisibleByFour";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Impossible: return "Impossible";
    case Verdict::PossibleCandidate: return "PossibleCandidate";
    case Verdict::ExistsTrivially: return "ExistsTrivially";
  }
  return "?";
}

BalancedHalfModel::BalancedHalfModel(int n, int k) : n_(n), k_(k) {
  if (n <= 0 || n % 2 != 0)
    throw DomainError("balanced-half model requires an even positive order, got " +
                      std::to_string(n));
  if (k < 0 || k > n / 2)
    throw DomainError("overlap count " + std::to_string(k) +
                      " outside [0, " + std::to_string(n / 2) + "]");
}

int BalancedHalfModel::ell() const {
  if (!twice_odd_form())
    throw DomainError("ell is defined only for orders 2 mod 4, got " +
                      std::to_string(n_));
  return (n_ / 2 - 1) / 2;
}

int predicted_orthogonal_number(int n, int k) {
  return BalancedHalfModel(n, k).predicted_inner_product();
}

int twice_odd_orthogonal_number(int ell, int k) {
  if (ell < 0) throw DomainError("ell must be nonnegative");
  if (k < 0 || k > 2 * ell + 1)
    throw DomainError("overlap count " + std::to_string(k) +
                      " outside [0, " + std::to_string(2 * ell + 1) + "]");
  return 4 * k - 4 * ell - 2;
}

OrderClass classify_order(int n) {
  if (n < 1) throw DomainError("order must be positive");
  if (n == 1)
    return {n, OrderKind::Odd, Verdict::ExistsTrivially,
            "order 1: the 1x1 matrix [+] satisfies the Gram identity"};
  if (n == 2)
    return {n, OrderKind::TwiceOdd, Verdict::ExistsTrivially,
            "order 2: the classical exception below the mod-4 threshold"};
  switch (n % 4) {
    case 0:
      return {n, OrderKind::DivisibleByFour, Verdict::PossibleCandidate,
              "candidate: 4k - n can vanish; existence is constructive"};
    case 2:
      return {n, OrderKind::TwiceOdd, Verdict::Impossible,
              "2-mod-4 obstruction: 4k - 4l - 2 is never zero"};
    default:
      return {n, OrderKind::Odd, Verdict::Impossible,
              "odd-parity obstruction: every inner product is odd"};
  }
}

OverlapLawCheck check_overlap_law(const SignVector& u, const SignVector& v) {
  if (u.size() != v.size())
    throw DimensionError("overlap law needs rows of equal length");
  if (!is_balanced(u))
    throw DomainError("first row is not balanced (length " +
                      std::to_string(u.size()) + ", " +
                      std::to_string(u.plus_count()) + " entries of +1)");
  if (!is_balanced(v))
    throw DomainError("second row is not balanced (length " +
                      std::to_string(v.size()) + ", " +
                      std::to_string(v.plus_count()) + " entries of +1)");

  OverlapLawCheck check{};
  check.g_actual = inner_product(u, v);
  check.overlap_count = overlap(u, v);
  check.g_predicted =
      predicted_orthogonal_number(static_cast<int>(u.size()),
                                  static_cast<int>(check.overlap_count));
  check.agrees = check.g_actual == check.g_predicted;
  return check;
}

}  // namespace hmat
