#include "turnover/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace turnover {

std::string_view reason_code(Reason reason) {
  switch (reason) {
    case Reason::kOrderBelowTwo: return "order_below_two";
    case Reason::kEuclidean: return "euclidean";
    case Reason::kSpherical: return "spherical";
    case Reason::kNonpositiveOrder: return "nonpositive_order";
    case Reason::kRelationViolated: return "relation_violated";
    case Reason::kWrongElementOrder: return "wrong_element_order";
    case Reason::kNotSurjective: return "not_surjective";
  }
  return "unknown";
}

InvalidInstance::InvalidInstance(Reason reason, const std::string& detail)
    : std::invalid_argument(std::string(reason_code(reason)) + ": " + detail), reason_(reason) {}

int mod(std::int64_t a, int n) {
  std::int64_t m = a % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

int gcd3(int a, int b, int c) { return std::gcd(std::gcd(a, b), c); }

int element_order(int a, int n) { return n / std::gcd(mod(a, n), n); }

int inverse_mod(int a, int n) {
  if (n == 1) return 0;
  // Extended Euclid on (a mod n, n).
  std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not a unit");
  return mod(old_s, n);
}

int distinct_prime_factors(int n) {
  int count = 0;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    ++count;
    while (n % d == 0) n /= d;
  }
  if (n > 1) ++count;
  return count;
}

ConeSignature validate_signature(int p1, int p2, int p3) {
  std::array<int, 3> p{p1, p2, p3};
  std::sort(p.begin(), p.end());
  if (p[0] < 2) {
    throw InvalidInstance(Reason::kOrderBelowTwo, "cone orders must be at least 2");
  }
  // 1/p1 + 1/p2 + 1/p3 < 1, cleared of denominators.
  const std::int64_t a = p[0], b = p[1], c = p[2];
  const std::int64_t lhs = a * b + a * c + b * c;
  const std::int64_t rhs = a * b * c;
  std::ostringstream what;
  what << "(" << a << ", " << b << ", " << c << ")";
  if (lhs == rhs) throw InvalidInstance(Reason::kEuclidean, what.str() + " is Euclidean");
  if (lhs > rhs) throw InvalidInstance(Reason::kSpherical, what.str() + " is spherical");
  return ConeSignature{p};
}

CyclicHom validate_hom(const ConeSignature& sig, int order, int a1, int a2, int a3) {
  if (order < 1) throw InvalidInstance(Reason::kNonpositiveOrder, "group order must be positive");
  CyclicHom hom{order, {mod(a1, order), mod(a2, order), mod(a3, order)}};
  const auto& a = hom.images;
  if (mod(std::int64_t{a[0]} + a[1] + a[2], order) != 0) {
    std::ostringstream what;
    what << "a1 + a2 + a3 = " << (a[0] + a[1] + a[2]) << " is not 0 mod " << order;
    throw InvalidInstance(Reason::kRelationViolated, what.str());
  }
  for (int i = 0; i < 3; ++i) {
    if (element_order(a[i], order) != sig.p[i]) {
      std::ostringstream what;
      what << "a" << i + 1 << " = " << a[i] << " has order " << element_order(a[i], order)
           << " in Z/" << order << ", expected " << sig.p[i];
      throw InvalidInstance(Reason::kWrongElementOrder, what.str());
    }
  }
  if (gcd3(a[1], a[2], order) != 1) {
    throw InvalidInstance(Reason::kNotSurjective, "a2 and a3 do not generate Z/N");
  }
  return hom;
}

Instance make_instance(std::array<int, 3> cone_orders, int order, std::array<int, 3> images) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return cone_orders[i] < cone_orders[j]; });
  const ConeSignature sig =
      validate_signature(cone_orders[idx[0]], cone_orders[idx[1]], cone_orders[idx[2]]);
  const CyclicHom hom =
      validate_hom(sig, order, images[idx[0]], images[idx[1]], images[idx[2]]);
  return Instance{sig, hom};
}

OrbifoldInvariants invariants(const ConeSignature& sig, const CyclicHom& hom) {
  const int N = hom.order;
  OrbifoldInvariants inv;
  inv.r = sig.r();
  inv.n = N / sig.r();
  int preimages = 0;
  for (int i = 0; i < 3; ++i) {
    if (N % sig.p[i] != 0) throw std::logic_error("invariants: cone order does not divide N");
    inv.preimage_counts[i] = N / sig.p[i];
    preimages += inv.preimage_counts[i];
    if (sig.p[i] == N) ++inv.fixed_point_count;
  }
  // Riemann-Hurwitz: chi(S) = N * chi_orb(Y) = sum N/p_i - N.
  inv.euler_char = preimages - N;
  if (inv.euler_char % 2 != 0 || inv.euler_char >= 0) {
    throw std::logic_error("invariants: Euler characteristic is not even and negative");
  }
  inv.genus = (2 - inv.euler_char) / 2;
  return inv;
}

bool lcm_law_check(const ConeSignature& sig, const CyclicHom& hom) {
  const auto& p = sig.p;
  const int N = hom.order;
  return std::lcm(p[0], p[1]) == N && std::lcm(p[0], p[2]) == N && std::lcm(p[1], p[2]) == N;
}

}  // namespace turnover
