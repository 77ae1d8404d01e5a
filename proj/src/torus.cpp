#include "turnover/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace turnover::torus {

std::optional<TorusClass> classify(const IntMatrix& m) {
  if (m.det() != 1) throw std::invalid_argument("classify: determinant must be 1");
  const IntMatrix identity{};
  const IntMatrix minus_identity{-1, 0, 0, -1};
  int order = 0;
  switch (m.trace()) {
    case 2: order = m == identity ? 1 : 0; break;
    case -2: order = m == minus_identity ? 2 : 0; break;
    case -1: order = 3; break;
    case 0: order = 4; break;
    case 1: order = 6; break;
    default: order = 0;
  }
  if (order == 0) return std::nullopt;
  return TorusClass{m, order};
}

std::int64_t intersection(TorusCurve v, TorusCurve w) {
  if (std::gcd(v.x, v.y) != 1 || std::gcd(w.x, w.y) != 1) {
    throw std::invalid_argument("intersection: slopes must be primitive");
  }
  return std::abs(v.x * w.y - v.y * w.x);
}

TorusResult find_curve(const TorusClass& tc) {
  constexpr std::int64_t kMaxNorm = 1000;
  const IntMatrix& m = tc.matrix;
  for (std::int64_t bound = 1; bound <= kMaxNorm; ++bound) {
    // Primitive vectors of max-norm exactly `bound`, one per sign class.
    std::vector<TorusCurve> shell;
    for (std::int64_t x = 0; x <= bound; ++x) {
      for (std::int64_t y = -bound; y <= bound; ++y) {
        if (std::max(x, std::abs(y)) != bound || std::gcd(x, y) != 1) continue;
        if (x == 0 && y < 0) continue;
        shell.push_back({x, y});
      }
    }
    std::sort(shell.begin(), shell.end(), [](const TorusCurve& u, const TorusCurve& v) {
      return std::tuple(std::abs(u.x) + std::abs(u.y), -u.x, -u.y) <
             std::tuple(std::abs(v.x) + std::abs(v.y), -v.x, -v.y);
    });
    for (const TorusCurve& v : shell) {
      const TorusCurve image{m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
      const std::int64_t i = intersection(v, image);
      if (i <= 1) return {v, i};
    }
  }
  throw std::logic_error("find_curve: no curve found within the search bound");
}

}  // namespace turnover::torus
