#include "hmat/constructions.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hmat/errors.hpp"

namespace hmat {

bool is_prime(int n) {
  if (n > 10000)
    throw CapacityError("primality by trial division is limited to 10^4");
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int mod_pow(std::int64_t base, int exponent, int modulus) {
  std::int64_t result = 1;
  base %= modulus;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = result * base % modulus;
    base = base * base % modulus;
  }
  return static_cast<int>(result);
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

int legendre_symbol(int a, int p) {
  if (p < 3 || !is_prime(p))
    throw DomainError(std::to_string(p) + " is not an odd prime");
  if (a < 0 || a >= p)
    throw DomainError("residue " + std::to_string(a) + " outside [0, " +
                      std::to_string(p) + ")");
  if (a == 0) return 0;
  int e = mod_pow(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

SignMatrix sylvester(int order) {
  if (!power_of_two(order))
    throw DomainError("Sylvester order must be a power of two, got " +
                      std::to_string(order));
  std::vector<SignVector> rows{SignVector::all_plus(1)};
  SignMatrix h{std::move(rows)};
  while (static_cast<int>(h.cols()) < order) {
    const std::size_t m = h.cols();
    h = SignMatrix::generate(2 * m, 2 * m, [&](std::size_t i, std::size_t j) {
      int sign = h.entry(i % m, j % m);
      return (i >= m && j >= m) ? -sign : sign;
    });
  }
  return h;
}

SignMatrix paley_one(int p) {
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  if (p % 4 != 3)
    throw DomainError("Paley type I requires p = 3 mod 4, got " +
                      std::to_string(p));

  std::vector<int> chi(p);
  for (int a = 0; a < p; ++a) chi[a] = legendre_symbol(a, p);

  // Border of +1s on the first row, -1s down the first column, and the
  // quadratic-character matrix with +1 diagonal inside.
  const int n = p + 1;
  return SignMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i == 0) return 1;
    if (j == 0) return -1;
    if (i == j) return 1;
    int diff = (static_cast<int>(i) - static_cast<int>(j)) % p;
    if (diff < 0) diff += p;
    return chi[diff];
  });
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  if (!a.square() || !b.square())
    throw ShapeError("Kronecker product requires square factors");
  const std::size_t na = a.cols(), nb = b.cols();
  return SignMatrix::generate(na * nb, na * nb,
                              [&](std::size_t i, std::size_t j) {
                                return a.entry(i / nb, j / nb) *
                                       b.entry(i % nb, j % nb);
                              });
}

ConstructionMethod ConstructionMethod::sylvester_of(int order) {
  ConstructionMethod m;
  m.tag = Tag::Sylvester;
  m.order = order;
  return m;
}

ConstructionMethod ConstructionMethod::paley_of(int prime) {
  ConstructionMethod m;
  m.tag = Tag::PaleyOne;
  m.prime = prime;
  return m;
}

ConstructionMethod ConstructionMethod::kronecker_of(ConstructionMethod l,
                                                    ConstructionMethod r) {
  ConstructionMethod m;
  m.tag = Tag::Kronecker;
  m.left = std::make_unique<ConstructionMethod>(std::move(l));
  m.right = std::make_unique<ConstructionMethod>(std::move(r));
  return m;
}

int ConstructionMethod::result_order() const {
  switch (tag) {
    case Tag::Sylvester: return order;
    case Tag::PaleyOne: return prime + 1;
    case Tag::Kronecker: return left->result_order() * right->result_order();
  }
  return 0;
}

SignMatrix build(const ConstructionMethod& method) {
  switch (method.tag) {
    case ConstructionMethod::Tag::Sylvester: return sylvester(method.order);
    case ConstructionMethod::Tag::PaleyOne: return paley_one(method.prime);
    case ConstructionMethod::Tag::Kronecker:
      return kronecker(build(*method.left), build(*method.right));
  }
  throw DomainError("unknown construction tag");
}

namespace {

// Base orders: powers of two (Sylvester) and p+1 for primes p = 3 mod 4
// (Paley I). Each comes with its leaf recipe.
std::vector<std::pair<int, ConstructionMethod (*)(int)>> base_factors(int limit) {
  std::vector<std::pair<int, ConstructionMethod (*)(int)>> out;
  auto sylv = +[](int n) { return ConstructionMethod::sylvester_of(n); };
  auto paley = +[](int n) { return ConstructionMethod::paley_of(n - 1); };
  for (int m = 1; m <= limit; m *= 2) {
    out.emplace_back(m, sylv);
    if (m > limit / 2) break;
  }
  for (int p = 3; p + 1 <= limit; ++p)
    if (p % 4 == 3 && is_prime(p)) out.emplace_back(p + 1, paley);
  return out;
}

}  // namespace

std::optional<ConstructionMethod> plan_order(int n) {
  if (n < 1) throw DomainError("order must be positive");
  if (power_of_two(n)) return ConstructionMethod::sylvester_of(n);
  if (n >= 4 && (n - 1) % 4 == 3 && is_prime(n - 1))
    return ConstructionMethod::paley_of(n - 1);
  for (const auto& [b, leaf] : base_factors(n)) {
    if (b < 2 || b >= n || n % b != 0) continue;
    if (auto rest = plan_order(n / b))
      return ConstructionMethod::kronecker_of(leaf(b), std::move(*rest));
  }
  return std::nullopt;
}

std::set<int> reachable_orders(int limit) {
  if (limit < 1) throw DomainError("limit must be positive");
  std::set<int> reached;
  for (const auto& [b, leaf] : base_factors(limit))
    if (b <= limit) reached.insert(b);
  reached.insert(1);
  if (limit >= 2) reached.insert(2);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(reached.begin(), reached.end());
    for (int a : snapshot)
      for (int b : snapshot) {
        if (a > limit / b) continue;
        if (reached.insert(a * b).second) grew = true;
      }
  }
  return reached;
}

}  // namespace hmat
