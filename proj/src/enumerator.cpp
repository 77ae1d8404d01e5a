#include "turnover/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace turnover {
namespace {

std::vector<std::array<int, 3>> signature_permutations(const ConeSignature& sig) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (sig.p[perm[0]] == sig.p[0] && sig.p[perm[1]] == sig.p[1] && sig.p[perm[2]] == sig.p[2]) {
      perms.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return perms;
}

template <typename Fn>
void for_each_equivalent(const Instance& instance, Fn&& fn) {
  const int N = instance.hom.order;
  const auto& a = instance.hom.images;
  const auto perms = signature_permutations(instance.sig);
  for (int u = 1; u <= N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    for (const auto& perm : perms) {
      fn(std::array<int, 3>{mod(std::int64_t{u} * a[perm[0]], N),
                            mod(std::int64_t{u} * a[perm[1]], N),
                            mod(std::int64_t{u} * a[perm[2]], N)});
    }
  }
}

int signature_euler_char(const std::array<int, 3>& p, int N) {
  return N / p[0] + N / p[1] + N / p[2] - N;
}

std::vector<int> divisors_from_two(int N) {
  std::vector<int> out;
  for (int d = 2; d <= N; ++d) {
    if (N % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<int> elements_of_order(int p, int N) {
  std::vector<int> out;
  const int step = N / p;
  for (int t = 1; t < p; ++t) {
    if (std::gcd(t, p) == 1) out.push_back(t * step);
  }
  return out;
}

InstanceClass make_class(const Instance& raw) {
  InstanceClass cls;
  cls.canonical_key = canonical_key(raw);
  cls.instance = Instance{raw.sig, CyclicHom{raw.hom.order, cls.canonical_key}};
  const auto inv = invariants(cls.instance.sig, cls.instance.hom);
  cls.genus = inv.genus;
  cls.fixed_point_free = inv.fixed_point_count == 0;
  return cls;
}

std::vector<InstanceClass> classes_for_order(int N, int max_genus, bool fpf_only) {
  std::set<std::tuple<ConeSignature, std::array<int, 3>>> seen;
  std::vector<InstanceClass> out;
  for (const Instance& raw : enumerate_raw(N, max_genus)) {
    if (fpf_only && raw.sig.r() == N) continue;
    auto key = canonical_key(raw);
    if (!seen.emplace(raw.sig, key).second) continue;
    out.push_back(make_class(raw));
  }
  return out;
}

bool class_less(const InstanceClass& x, const InstanceClass& y) {
  return std::tie(x.instance.hom.order, x.instance.sig, x.canonical_key) <
         std::tie(y.instance.hom.order, y.instance.sig, y.canonical_key);
}

// Runs fn(N) for N in [lo, hi] on a small worker pool; results are merged and
// sorted so the output does not depend on scheduling.
template <typename Fn>
std::vector<InstanceClass> run_orders(int lo, int hi, int jobs, Fn&& fn) {
  if (hi < lo) return {};
  const int count = hi - lo + 1;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, count);
  std::vector<std::vector<InstanceClass>> buckets(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) buckets[i] = fn(lo + i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<InstanceClass> merged;
  for (auto& b : buckets) merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end(), class_less);
  return merged;
}

}  // namespace

std::array<int, 3> canonical_key(const Instance& instance) {
  std::array<int, 3> best = instance.hom.images;
  for_each_equivalent(instance, [&](const std::array<int, 3>& a) { best = std::min(best, a); });
  return best;
}

int orbit_size(const Instance& instance) {
  std::set<std::array<int, 3>> images;
  for_each_equivalent(instance, [&](const std::array<int, 3>& a) { images.insert(a); });
  return static_cast<int>(images.size());
}

std::vector<Instance> enumerate_raw(int N, int max_genus) {
  std::vector<Instance> out;
  const auto divs = divisors_from_two(N);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = i; j < divs.size(); ++j) {
      for (std::size_t k = j; k < divs.size(); ++k) {
        const std::array<int, 3> p{divs[i], divs[j], divs[k]};
        const std::int64_t lhs = std::int64_t{p[0]} * p[1] + std::int64_t{p[0]} * p[2] +
                                 std::int64_t{p[1]} * p[2];
        if (lhs >= std::int64_t{p[0]} * p[1] * p[2]) continue;
        if (max_genus > 0 && (2 - signature_euler_char(p, N)) / 2 > max_genus) continue;
        const ConeSignature sig{p};
        const auto a1s = elements_of_order(p[0], N);
        const auto a2s = elements_of_order(p[1], N);
        for (int a1 : a1s) {
          for (int a2 : a2s) {
            const int a3 = mod(-std::int64_t{a1} - a2, N);
            if (element_order(a3, N) != p[2]) continue;
            if (gcd3(a2, a3, N) != 1) continue;
            out.push_back(Instance{sig, CyclicHom{N, {a1, a2, a3}}});
          }
        }
      }
    }
  }
  return out;
}

std::vector<InstanceClass> enumerate_admissible(int max_order, int jobs) {
  return run_orders(2, max_order, jobs, [](int N) { return classes_for_order(N, 0, false); });
}

int max_order_for_genus(int genus) { return 84 * (genus - 1); }

std::vector<InstanceClass> enumerate_by_genus(int max_genus, bool fpf_only, int jobs) {
  if (max_genus < 2) return {};
  return run_orders(2, max_order_for_genus(max_genus), jobs, [&](int N) {
    return classes_for_order(N, max_genus, fpf_only);
  });
}

std::optional<InstanceClass> find_min_fpf(int max_genus, int jobs) {
  const auto classes = enumerate_by_genus(max_genus, true, jobs);
  // classes is sorted by (N, sig, key); a stable min by genus keeps that tie order.
  auto best = std::min_element(classes.begin(), classes.end(),
                               [](const auto& x, const auto& y) { return x.genus < y.genus; });
  if (best == classes.end()) return std::nullopt;
  return *best;
}

bool fpf_prime_check(const std::vector<InstanceClass>& classes) {
  return std::all_of(classes.begin(), classes.end(), [](const InstanceClass& c) {
    return !c.fixed_point_free || distinct_prime_factors(c.instance.hom.order) >= 3;
  });
}

}  // namespace turnover
