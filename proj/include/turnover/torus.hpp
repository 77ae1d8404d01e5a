#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace turnover::torus {

/// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors.
struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  bool operator==(const IntMatrix&) const = default;
  IntMatrix operator*(const IntMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
};

/// Slope of a simple closed curve on the torus, as a primitive vector.
struct TorusCurve {
  std::int64_t x = 1, y = 0;

  bool operator==(const TorusCurve&) const = default;
};

struct TorusClass {
  IntMatrix matrix;
  int order = 1;
};

/// Finite-order classification by trace. Returns nullopt for infinite order;
/// throws std::invalid_argument unless det = 1.
std::optional<TorusClass> classify(const IntMatrix& m);

/// |det(v | w)|; throws std::invalid_argument for non-primitive input.
std::int64_t intersection(TorusCurve v, TorusCurve w);

struct TorusResult {
  TorusCurve curve;
  std::int64_t intersection = 0;
};

/// First primitive v (by max-norm, then |x| + |y|, then larger coordinates
/// first) with i(v, Mv) <= 1. Vectors are taken up to sign.
TorusResult find_curve(const TorusClass& tc);

}  // namespace turnover::torus
