#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <wbirkhoff/lyapunov.hpp>
#include <wbirkhoff/systems.hpp>

using namespace wbirkhoff;

TEST(Lyapunov, ConstantHyperbolicJacobian) {
  // cat map: eigenvalues (3 +- sqrt 5)/2
  const Mat2<double> cat{2, 1, 1, 1};
  std::vector<Vec2<double>> orbit(2000, Vec2<double>{0, 0});
  JacobianFn<double> jac = [&](const Vec2<double>&) { return cat; };
  auto p = lyapunov_pair<double>(orbit, jac, {1, 0}, WeightKind::exponential(1));
  const double l = std::log((3 + std::sqrt(5.0)) / 2);
  EXPECT_NEAR(p.lambda2, l, 1e-12);
  EXPECT_NEAR(p.lambda1, -l, 1e-12);
  EXPECT_NEAR(p.sum(), 0.0, 1e-15);
}

TEST(Lyapunov, DiagonalJacobian) {
  const Mat2<double> d{3, 0, 0, 0.5};
  std::vector<Vec2<double>> orbit(1000, Vec2<double>{0, 0});
  JacobianFn<double> jac = [&](const Vec2<double>&) { return d; };
  EXPECT_NEAR(lyapunov_max<double>(orbit, jac, {1, 1}, WeightKind::exponential(1)), std::log(3.0), 1e-12);
  EXPECT_NEAR(lyapunov_sum<double>(orbit, jac, WeightKind::equal()), std::log(1.5), 1e-15);
}

TEST(Lyapunov, RotationMatrixHasZeroExponents) {
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Mat2<double> r{c, -s, s, c};
  std::vector<Vec2<double>> orbit(500, Vec2<double>{0, 0});
  JacobianFn<double> jac = [&](const Vec2<double>&) { return r; };
  auto p = lyapunov_pair<double>(orbit, jac, {0.3, -2}, WeightKind::exponential(1));
  EXPECT_NEAR(p.lambda1, 0.0, 1e-14);
  EXPECT_NEAR(p.lambda2, 0.0, 1e-14);
}

TEST(Lyapunov, StreamingMatchesBatch) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 3000);
  JacobianFn<double> jac = [](const Vec2<double>& x) { return standard_map_jacobian(x, 1.0); };
  LyapunovAccumulator<double> acc(WeightKind::exponential(1), orbit.size(), {1, 0});
  for (const auto& x : orbit) acc.observe(jac(x));
  auto p = lyapunov_pair<double>(orbit, jac, {1, 0}, WeightKind::exponential(1));
  EXPECT_EQ(acc.pair().lambda2, p.lambda2);
  EXPECT_EQ(acc.observed(), orbit.size());
}

TEST(Lyapunov, StandardMapOnInvariantCircle) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 100000);
  JacobianFn<double> jac = [](const Vec2<double>& x) { return standard_map_jacobian(x, 1.0); };
  auto p = lyapunov_pair<double>(orbit, jac, {1, 0}, WeightKind::exponential(1));
  EXPECT_NEAR(p.sum(), 0.0, 1e-15);
  // tangent vectors are sheared along the circle, so |DT^n v| grows linearly and
  // lambda2 decays only like ln N / N; super-convergence needs a 2-D torus
  const double n = static_cast<double>(orbit.size());
  EXPECT_GT(p.lambda2, 0.0);
  EXPECT_LT(p.lambda2, 2 * std::log(n) / n);
  auto shorter = lyapunov_pair<double>(std::span(orbit).first(10000), jac, {1, 0}, WeightKind::exponential(1));
  EXPECT_GT(shorter.lambda2, 3 * p.lambda2);
}

TEST(Lyapunov, Contracts) {
  std::vector<Vec2<double>> two(2, Vec2<double>{0, 0});
  JacobianFn<double> id = [](const Vec2<double>&) { return Mat2<double>{1, 0, 0, 1}; };
  EXPECT_THROW(lyapunov_pair<double>(two, id, {1, 0}, WeightKind::equal()), ContractError);
  std::vector<Vec2<double>> orbit(10, Vec2<double>{0, 0});
  EXPECT_THROW(lyapunov_pair<double>(orbit, id, {0, 0}, WeightKind::equal()), ContractError);
  JacobianFn<double> singular = [](const Vec2<double>&) { return Mat2<double>{1, 1, 1, 1}; };
  EXPECT_THROW(lyapunov_pair<double>(orbit, singular, {1, 0}, WeightKind::equal()), ComputationError);
  EXPECT_THROW(lyapunov_sum<double>(orbit, singular, WeightKind::equal()), ComputationError);
  JacobianFn<double> bad = [](const Vec2<double>&) { return Mat2<double>{std::nan(""), 0, 0, 1}; };
  EXPECT_THROW(lyapunov_pair<double>(orbit, bad, {1, 0}, WeightKind::equal()), ComputationError);
}
