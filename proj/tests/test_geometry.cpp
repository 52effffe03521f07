#include <catch2/catch_amalgamated.hpp>
#include <dsgen/geometry.hpp>
#include <dsgen/rng.hpp>

#include "test_helpers.hpp"

using namespace dsgen;
using std::numbers::pi;

TEST_CASE("compose with identity is a no-op", "[geometry]") {
  Rng rng(42);
  const RigidTransform t = testutil::random_transform(rng, "a", "b");
  const RigidTransform r = compose(t, identity_transform("a"));
  REQUIRE((r.rotation - t.rotation).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((r.translation - t.translation).norm() < 1e-12);
  REQUIRE(r.from_frame == "a");
  REQUIRE(r.to_frame == "b");
}

TEST_CASE("pure translations add under composition", "[geometry]") {
  const auto a = translation_transform({1, 0, 0}, "mid", "end");
  const auto b = translation_transform({0, 2, 0}, "start", "mid");
  const auto r = compose(a, b);
  REQUIRE((r.translation - Vec3(1, 2, 0)).norm() < 1e-15);
  REQUIRE(r.from_frame == "start");
  REQUIRE(r.to_frame == "end");
}

TEST_CASE("rotations about z compose by angle addition", "[geometry]") {
  const RigidTransform a{rot_z(pi / 2), Vec3::Zero(), "a", "a"};
  const RigidTransform b{rot_z(pi / 2), Vec3::Zero(), "a", "a"};
  const auto r = compose(a, b);
  REQUIRE((r.rotation - rot_z(pi)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("compose rejects mismatched frames", "[geometry]") {
  const auto a = identity_transform("a");
  const auto b = identity_transform("b");
  REQUIRE_THROWS_AS(compose(a, b), FrameMismatch);
}

TEST_CASE("invert basics", "[geometry]") {
  const auto id = identity_transform("w");
  const auto inv_id = invert(id);
  REQUIRE((inv_id.rotation - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(inv_id.translation.norm() == 0.0);

  const auto t = translation_transform({1, 2, 3}, "a", "b");
  REQUIRE((invert(t).translation - Vec3(-1, -2, -3)).norm() < 1e-15);
  REQUIRE(invert(t).from_frame == "b");
  REQUIRE(invert(t).to_frame == "a");
}

TEST_CASE("invert is an involution and a true inverse", "[geometry]") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto t = testutil::random_transform(rng);
    const auto tt = invert(invert(t));
    REQUIRE((tt.rotation - t.rotation).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE((tt.translation - t.translation).norm() < 1e-12);

    const auto id = compose(t, invert(t));
    REQUIRE((id.rotation - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-9);
    REQUIRE(id.translation.norm() < 1e-9);
  }
}

TEST_CASE("rotation stays orthonormal over long chains", "[geometry]") {
  Rng rng(1234);
  RigidTransform acc = identity_transform("f");
  for (int i = 0; i < 10000; ++i) {
    RigidTransform step = testutil::random_transform(rng, "f", "f");
    acc = compose(acc, step);
    acc.translation = Vec3::Zero();  // keep numbers bounded; rotation is the point
  }
  REQUIRE(orthonormality_defect(acc.rotation) < 1e-9);
  REQUIRE(acc.rotation.determinant() == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("rotation_log round trips through AngleAxis", "[geometry]") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const Mat3 r = testutil::random_rotation(rng);
    const Vec3 w = rotation_log(r);
    const Mat3 back = Eigen::AngleAxisd(w.norm(), w.normalized()).toRotationMatrix();
    REQUIRE((back - r).cwiseAbs().maxCoeff() < 1e-10);
  }
}
