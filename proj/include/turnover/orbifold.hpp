#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turnover {

/// Stable reason codes for rejected turnover data.
enum class Reason {
  kOrderBelowTwo,
  kEuclidean,
  kSpherical,
  kNonpositiveOrder,
  kRelationViolated,
  kWrongElementOrder,
  kNotSurjective,
};

std::string_view reason_code(Reason reason);

class InvalidInstance : public std::invalid_argument {
 public:
  InvalidInstance(Reason reason, const std::string& detail);
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Cone orders of the quotient turnover S^2(p1, p2, p3), sorted ascending.
struct ConeSignature {
  std::array<int, 3> p{};

  int r() const { return p[2]; }
  bool operator==(const ConeSignature&) const = default;
  auto operator<=>(const ConeSignature&) const = default;
};

/// A surjection of the turnover group onto Z/N: images[i] is the residue of
/// the loop around the i-th cone point.
struct CyclicHom {
  int order = 0;
  std::array<int, 3> images{};

  bool operator==(const CyclicHom&) const = default;
};

struct Instance {
  ConeSignature sig;
  CyclicHom hom;

  bool operator==(const Instance&) const = default;
};

struct OrbifoldInvariants {
  int r = 0;
  int n = 0;
  int genus = 0;
  int fixed_point_count = 0;
  std::array<int, 3> preimage_counts{};
  int euler_char = 0;
};

// Exact modular helpers.
int mod(std::int64_t a, int n);
int gcd3(int a, int b, int c);
/// Additive order of a in Z/n, i.e. n / gcd(a, n).
int element_order(int a, int n);
/// Inverse of a unit modulo n (n >= 1). Throws std::domain_error otherwise.
int inverse_mod(int a, int n);
int distinct_prime_factors(int n);

ConeSignature validate_signature(int p1, int p2, int p3);
CyclicHom validate_hom(const ConeSignature& sig, int order, int a1, int a2, int a3);

/// Sorts (p_i, a_i) pairs by cone order, stably, then validates both halves.
Instance make_instance(std::array<int, 3> cone_orders, int order, std::array<int, 3> images);

OrbifoldInvariants invariants(const ConeSignature& sig, const CyclicHom& hom);

/// True iff N = lcm(p_i, p_j) for all three pairs.
bool lcm_law_check(const ConeSignature& sig, const CyclicHom& hom);

}  // namespace turnover
