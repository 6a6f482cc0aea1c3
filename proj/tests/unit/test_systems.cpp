#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <wbirkhoff/systems.hpp>

#include "oracles.hpp"

using namespace wbirkhoff;

namespace {

const double kTwoPi = 2 * M_PI;

}  // namespace

TEST(Systems, RigidRotationOrbitIsExact) {
  const std::vector<double> rho{0.1}, th0{0.95};
  auto s = rigid_rotation_orbit<double>(rho, th0, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_NEAR(s.lift(i), 0.95 + 0.1 * i, 1e-14);
    EXPECT_GE(s.angle(i), 0.0);
    EXPECT_LT(s.angle(i), 1.0);
  }
  const std::vector<double> bad{0.1, 0.2};
  EXPECT_THROW(rigid_rotation_orbit<double>(rho, bad, 5), ContractError);
}

TEST(Systems, PerturbedObservationFormula) {
  for (double t : {0.0, 0.2, 0.7}) {
    double want = t + 0.1 * std::cos(kTwoPi * t) + 0.2 * std::sin(kTwoPi * t);
    want -= std::floor(want);
    EXPECT_NEAR(perturbed_observation(t, 0.1, 0.2), want, 1e-15);
  }
}

TEST(Systems, OffCenterObserverQuarterTurn) {
  EXPECT_DOUBLE_EQ(offcenter_observer(0.0), 0.0);
  EXPECT_NEAR(offcenter_observer(0.5), 0.5, 1e-15);
  // (0, 1) seen from (1/2, 0)
  EXPECT_NEAR(offcenter_observer(0.25), std::atan2(1.0, -0.5) / kTwoPi, 1e-15);
}

TEST(Systems, StandardMapStepMatchesQuadOracle) {
  const double alpha = 1.0;
  for (auto p : {Vec2<double>{1.159692208627139, 0.0}, Vec2<double>{6.2, 6.1}, Vec2<double>{0.0, 3.0}}) {
    auto got = standard_map_step(p, alpha);
    auto want = oracle::standard_map(oracle::Quad(p[0]), oracle::Quad(p[1]), oracle::Quad(alpha));
    for (int c = 0; c < 2; ++c) {
      double d = got[c] - static_cast<double>(want[c]);
      d -= kTwoPi * std::round(d / kTwoPi);
      EXPECT_NEAR(d, 0.0, 4e-15) << c;
    }
  }
}

TEST(Systems, StandardMapOrbitMatchesSteps) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 50);
  ASSERT_EQ(orbit.size(), 50u);
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    auto s = standard_map_step(orbit[i], 1.0);
    for (int c = 0; c < 2; ++c) {
      double d = s[c] - orbit[i + 1][c];
      d -= kTwoPi * std::round(d / kTwoPi);
      EXPECT_NEAR(d, 0.0, 1e-14);
    }
  }
}

TEST(Systems, StandardMapOrbitStaysInFundamentalDomain) {
  auto orbit = standard_map_orbit<double>({2.0, 1.0}, 1.0, 20000);
  for (const auto& p : orbit)
    for (double v : p) {
      ASSERT_GE(v, 0.0);
      ASSERT_LT(v, kTwoPi);
    }
}

TEST(Systems, StandardMapJacobianDeterminantIsOne) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 5000);
  for (const auto& p : orbit) {
    auto m = standard_map_jacobian(p, 1.0);
    ASSERT_NEAR(m[0] * m[3] - m[1] * m[2], 1.0, 1e-15);
  }
}

TEST(Systems, StandardMapJacobianMatchesFiniteDifferences) {
  auto map = [](double x, double y) {
    // unwrapped form for differencing
    return std::array<double, 2>{x + y, y + std::sin(x + y)};
  };
  for (auto p : {Vec2<double>{0.3, 1.1}, Vec2<double>{4.0, 2.5}}) {
    auto fd = oracle::jacobian_fd(map, p[0], p[1]);
    auto m = standard_map_jacobian(p, 1.0);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(m[i], fd[i], 1e-8);
  }
}

TEST(Systems, TorusMapJacobianMatchesFiniteDifferences) {
  const auto params = TorusMapParams<double>::reference();
  for (auto p : {Vec2<double>{0.1, 0.2}, Vec2<double>{0.77, 0.4}, Vec2<double>{0.5, 0.95}}) {
    auto map = [&](double x, double y) {
      auto q = torus_map_step<double>({x, y}, params);
      // undo the wrap relative to the base point
      auto base = torus_map_step<double>(p, params);
      return std::array<double, 2>{q[0] - std::round(q[0] - base[0]), q[1] - std::round(q[1] - base[1])};
    };
    auto fd = oracle::jacobian_fd(map, p[0], p[1], 1e-6);
    auto m = torus_map_jacobian(p, params);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(m[i], fd[i], 1e-8) << i;
  }
}

TEST(Systems, TorusMapOrbitInUnitSquareAndDeterministic) {
  const auto params = TorusMapParams<double>::reference();
  auto a = torus_map_orbit<double>({0, 0}, params, 10000);
  auto b = torus_map_orbit<double>({0, 0}, params, 10000);
  EXPECT_EQ(a, b);
  for (const auto& p : a)
    for (double v : p) {
      ASSERT_GE(v, 0.0);
      ASSERT_LT(v, 1.0);
    }
}

TEST(Systems, TorusAngularCoordinateUsesCenteredChart) {
  const std::vector<Vec2<double>> pts{{kTwoPi - 0.1, 0.0}, {0.1, 0.0}, {M_PI, 1.0}};
  // center (0,0): first point sits just left of the center, not near 2 pi
  auto a = torus_angular_coordinate<double>(pts, {0.0, 0.0}, kTwoPi);
  EXPECT_NEAR(a[0], 0.5, 1e-15);
  EXPECT_NEAR(a[1], 0.0, 1e-15);
  auto b = torus_angular_coordinate<double>(pts, {M_PI, 0.0}, kTwoPi);
  EXPECT_NEAR(b[2], 0.25, 1e-15);
}

TEST(Systems, ReferenceTorusParameters) {
  const auto p = TorusMapParams<double>::reference();
  const auto rho = TorusMapParams<double>::reference_rotation();
  EXPECT_GT(p.epsilon, 0.0);
  EXPECT_GT(rho[0], 0.0);
  EXPECT_LT(rho[1], 1.0);
}

TEST(Systems, FlattenRowMajor) {
  const std::vector<Vec2<double>> pts{{1, 2}, {3, 4}};
  EXPECT_EQ(flatten<double>(pts), (std::vector<double>{1, 2, 3, 4}));
}

TEST(Systems, ExtendedStandardMapAgreesOverShortOrbit) {
  auto d = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 200);
  auto e = standard_map_orbit<Extended>({Extended(1.159692208627139), Extended(0)}, Extended(1), 200);
  // on an invariant circle, errors grow only linearly
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int c = 0; c < 2; ++c) {
      double diff = d[i][c] - static_cast<double>(e[i][c]);
      diff -= kTwoPi * std::round(diff / kTwoPi);
      ASSERT_NEAR(diff, 0.0, 1e-11) << i;
    }
}
