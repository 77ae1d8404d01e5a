#pragma once

#include <array>
#include <optional>
#include <vector>

#include "turnover/orbifold.hpp"

namespace turnover {

/// An admissible instance up to change of generator (a -> u*a for units u)
/// and permutation of cone points of equal order.
struct InstanceClass {
  Instance instance;
  std::array<int, 3> canonical_key{};
  int genus = 0;
  bool fixed_point_free = false;
};

/// Lexicographically least image triple over the unit action and the
/// permutations that fix the signature.
std::array<int, 3> canonical_key(const Instance& instance);

/// Number of distinct raw triples equivalent to this instance.
int orbit_size(const Instance& instance);

/// Every admissible (sorted) signature and image triple with group order N,
/// without identification. Signatures of genus above max_genus are skipped
/// when max_genus is positive.
std::vector<Instance> enumerate_raw(int order, int max_genus = 0);

/// Equivalence classes with 2 <= N <= max_order, sorted by (N, sig, key).
/// jobs <= 0 uses the hardware concurrency.
std::vector<InstanceClass> enumerate_admissible(int max_order, int jobs = 0);

/// Largest group order a genus-g instance can have: N <= 84 (g - 1).
int max_order_for_genus(int genus);

/// Classes of genus <= max_genus (all N up to the area bound).
std::vector<InstanceClass> enumerate_by_genus(int max_genus, bool fpf_only, int jobs = 0);

/// Minimal-genus fixed-point-free class with genus <= max_genus, ties broken
/// by N then canonical key.
std::optional<InstanceClass> find_min_fpf(int max_genus, int jobs = 0);

/// True iff every fixed-point-free class has N with >= 3 distinct primes.
bool fpf_prime_check(const std::vector<InstanceClass>& classes);

}  // namespace turnover
