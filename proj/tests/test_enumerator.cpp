#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "turnover/enumerator.hpp"

using namespace turnover;

namespace {

oracle::Triple as_triple(const Instance& inst) { return {inst.sig.p, inst.hom.images}; }

}  // namespace

TEST_CASE("raw enumeration equals the cube scan") {
  for (int N = 2; N <= 30; ++N) {
    std::set<oracle::Triple> got;
    for (const auto& inst : enumerate_raw(N)) got.insert(as_triple(inst));
    CHECK_MESSAGE(got == oracle::admissible_cube(N), "N = " << N);
  }
}

TEST_CASE("canonical classes equal orbit closure") {
  const auto classes = enumerate_admissible(30, 1);
  std::map<int, std::set<oracle::Triple>> by_order;
  for (const auto& c : classes) {
    CHECK(c.canonical_key == c.instance.hom.images);
    CHECK(canonical_key(c.instance) == c.canonical_key);
    by_order[c.instance.hom.order].insert(as_triple(c.instance));
  }
  for (int N = 2; N <= 30; ++N) {
    CHECK_MESSAGE(by_order[N] == oracle::class_representatives(N), "N = " << N);
  }
}

TEST_CASE("orbit sizes partition the raw list") {
  for (int N : {10, 12, 30, 42}) {
    const auto raw = enumerate_raw(N);
    std::map<std::array<int, 3>, int> count;
    for (const auto& inst : raw) ++count[canonical_key(inst)];
    for (const auto& inst : raw) CHECK(orbit_size(inst) == count[canonical_key(inst)]);
  }
}

TEST_CASE("enumeration is independent of thread count") {
  const auto one = enumerate_admissible(48, 1);
  const auto four = enumerate_admissible(48, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].instance == four[i].instance);
}

TEST_CASE("genus filter and area bound") {
  CHECK(max_order_for_genus(2) == 84);
  CHECK(max_order_for_genus(11) == 840);
  const auto g2 = enumerate_by_genus(2, false, 1);
  CHECK(!g2.empty());
  for (const auto& c : g2) {
    CHECK(c.genus >= 2);
    CHECK(c.genus <= 2);
  }
  // every genus-2 class of order <= 10 appears
  std::set<std::array<int, 3>> keys;
  for (const auto& c : g2) keys.insert(c.canonical_key);
  for (const auto& c : enumerate_admissible(10, 1)) {
    if (c.genus == 2) CHECK(keys.count(c.canonical_key) == 1);
  }
}

TEST_CASE("fixed-point-free search") {
  CHECK_FALSE(find_min_fpf(2, 1).has_value());
  const auto fpf = enumerate_admissible(60, 1);
  CHECK(fpf_prime_check(fpf));
  int count = 0;
  for (const auto& c : fpf) {
    if (!c.fixed_point_free) continue;
    ++count;
    CHECK(c.instance.sig.r() < c.instance.hom.order);
    CHECK(distinct_prime_factors(c.instance.hom.order) >= 3);
  }
  CHECK(count >= 1);
}

TEST_CASE("genus-bounded search matches unrestricted enumeration") {
  const int g = 3;
  std::set<std::pair<int, std::array<int, 3>>> bounded, full;
  for (const auto& c : enumerate_by_genus(g, false, 1)) bounded.insert({c.instance.hom.order, c.canonical_key});
  for (const auto& c : enumerate_admissible(max_order_for_genus(g), 1)) {
    if (c.genus <= g) full.insert({c.instance.hom.order, c.canonical_key});
  }
  CHECK(!bounded.empty());
  CHECK(bounded == full);
}
