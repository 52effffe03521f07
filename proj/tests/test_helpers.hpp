#pragma once

#include <dsgen/geometry.hpp>
#include <dsgen/rng.hpp>

namespace testutil {

inline dsgen::Vec3 random_unit(dsgen::Rng& rng) {
  // Marsaglia rejection on the cube.
  for (;;) {
    dsgen::Vec3 v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double n = v.norm();
    if (n > 1e-3 && n <= 1.0) return v / n;
  }
}

inline dsgen::Mat3 random_rotation(dsgen::Rng& rng) {
  return Eigen::AngleAxisd(rng.uniform(-3.0, 3.0), random_unit(rng))
      .toRotationMatrix();
}

inline dsgen::RigidTransform random_transform(dsgen::Rng& rng,
                                              const std::string& from = "a",
                                              const std::string& to = "b") {
  return {random_rotation(rng),
          dsgen::Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)),
          from, to};
}

}  // namespace testutil
