#pragma once

#include <memory>
#include <optional>
#include <set>

#include "hmat/sign_matrix.hpp"

namespace hmat {

// Trial-division primality test for small inputs (capacity 10^4).
bool is_prime(int n);

// Quadratic character of a modulo an odd prime p:
//  0 for a == 0, +1 for a nonzero square mod p, -1 otherwise.
int legendre_symbol(int a, int p);

// Doubling construction H(2m) = [[H, H], [H, -H]] starting from [[+]].
// order must be a power of two.
SignMatrix sylvester(int order);

// Order-(p+1) matrix built from the quadratic character over GF(p),
// for prime p with p % 4 == 3. The result always satisfies the Gram
// identity (asserted by the tests, which are the binding contract for
// the chosen sign convention).
SignMatrix paley_one(int p);

// Kronecker product of two square sign matrices; orders multiply and
// the Hadamard property is preserved.
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

// A recipe composing the three constructions.
struct ConstructionMethod {
  enum class Tag { Sylvester, PaleyOne, Kronecker };

  Tag tag;
  int order = 0;  // Sylvester: the target power of two
  int prime = 0;  // PaleyOne: the prime p (order p + 1)
  std::unique_ptr<ConstructionMethod> left, right;  // Kronecker factors

  static ConstructionMethod sylvester_of(int order);
  static ConstructionMethod paley_of(int prime);
  static ConstructionMethod kronecker_of(ConstructionMethod l, ConstructionMethod r);

  int result_order() const;
};

// Execute a recipe.
SignMatrix build(const ConstructionMethod& method);

// A recipe reaching order n, if the three constructions can compose to
// it; deterministic (smallest base factor first).
std::optional<ConstructionMethod> plan_order(int n);

// All orders <= limit reachable by composing the constructions: the
// multiplicative closure of {1, 2} and {p+1 : p prime, p % 4 == 3}.
std::set<int> reachable_orders(int limit);

}  // namespace hmat
