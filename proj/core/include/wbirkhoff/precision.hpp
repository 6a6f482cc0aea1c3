#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

namespace wbirkhoff {

using Extended = boost::multiprecision::float128;

enum class PrecisionTier { Standard, Extended };

template <class Real>
struct TierTraits;

template <>
struct TierTraits<double> {
  static constexpr PrecisionTier tier = PrecisionTier::Standard;
  static constexpr int output_digits = 17;
  static constexpr std::string_view name = "standard";
  static double noise_floor() { return 1e-13; }
};

template <>
struct TierTraits<Extended> {
  static constexpr PrecisionTier tier = PrecisionTier::Extended;
  static constexpr int output_digits = 36;
  static constexpr std::string_view name = "extended";
  static Extended noise_floor() { return Extended(1e-28); }
};

std::string_view tier_name(PrecisionTier tier);
// Decimal text to Real, keeping every digit the tier can hold.
template <class Real>
Real real_from_string(std::string_view text);
PrecisionTier parse_tier(std::string_view name);

template <class Real>
inline Real pi_v() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
inline bool is_finite(const Real& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

template <class Real>
inline Real two_pi_v() {
  return Real(2) * pi_v<Real>();
}

// Error-free product: a*b == hi + lo exactly (fma is exact on both tiers).
template <class Real>
inline std::pair<Real, Real> two_product(Real a, Real b) {
  using std::fma;
  using boost::multiprecision::fma;
  Real hi = a * b;
  Real lo = fma(a, b, -hi);
  return {hi, lo};
}

// x mod 1 into [0,1).
template <class Real>
inline Real unit_mod(Real x) {
  using std::floor;
  Real r = x - floor(x);
  if (r >= Real(1)) r = Real(0);
  return r;
}

// floor(m*rho) and frac(m*rho) with the product carried exactly, so the
// fractional part keeps full precision even when m*rho is large.
template <class Real>
struct SplitProduct {
  std::int64_t whole;
  Real frac;
};

template <class Real>
inline SplitProduct<Real> split_product(std::int64_t m, Real rho) {
  using std::floor;
  auto [hi, lo] = two_product(Real(m), rho);
  Real ihi = floor(hi);
  Real f = (hi - ihi) + lo;
  Real carry = floor(f);
  f -= carry;
  if (f >= Real(1)) {
    f = Real(0);
    carry += Real(1);
  }
  return {static_cast<std::int64_t>(ihi) + static_cast<std::int64_t>(carry), f};
}

template <class Real>
inline Real frac_product(std::int64_t m, Real rho) {
  return split_product(m, rho).frac;
}

}  // namespace wbirkhoff
