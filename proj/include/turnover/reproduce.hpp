#pragma once

#include <string>
#include <vector>

#include "turnover/orbifold.hpp"

namespace turnover {

struct ReproCheck {
  std::string claim;
  std::string observed;
  bool ok = false;
};

struct ReproReport {
  std::string example;
  std::vector<ReproCheck> checks;

  bool ok() const;
  std::string to_text() const;
};

/// The order-30 map on the genus-11 surface with cone orders (6, 10, 15).
Instance fixed_point_free_example();

ReproReport reproduce_fixed_point_free_example();

/// Rotation of the regular (4g + 2)-gon with opposite sides identified,
/// located in the enumeration of order 4g + 2.
ReproReport reproduce_rotation_example(int genus);

}  // namespace turnover
