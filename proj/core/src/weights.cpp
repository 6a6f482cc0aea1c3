#include "wbirkhoff/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/summation.hpp"

namespace wbirkhoff {

WeightKind WeightKind::exponential(int p) {
  if (p < 1) throw ContractError("exponential weight requires p >= 1");
  return {WeightFamily::Exponential, p};
}

std::string WeightKind::name() const {
  switch (family) {
    case WeightFamily::Equal: return "equal";
    case WeightFamily::Quadratic: return "quad";
    case WeightFamily::SinSquared: return "sin2";
    case WeightFamily::Exponential: return "exp" + std::to_string(p);
  }
  return "?";
}

WeightKind WeightKind::parse(std::string_view text) {
  if (text == "equal" || text == "birkhoff") return equal();
  if (text == "quad" || text == "quadratic") return quadratic();
  if (text == "sin2" || text == "sinsquared") return sin_squared();
  if (text == "exp" || text == "exponential") return exponential(1);
  if (text.size() > 3 && text.substr(0, 3) == "exp") {
    int p = 0;
    for (char c : text.substr(3)) {
      if (c < '0' || c > '9') throw ContractError("unknown weight kind '" + std::string(text) + "'");
      p = p * 10 + (c - '0');
      if (p > 1000) break;
    }
    return exponential(p);
  }
  throw ContractError("unknown weight kind '" + std::string(text) + "'");
}

namespace {

// w evaluated from t and 1-t supplied separately, so callers that know both
// exactly get w(t) == w(1-t) bit for bit.
template <class Real>
Real weight_from_parts(WeightKind kind, Real a, Real b) {
  using std::exp;
  using std::log;
  using std::sin;
  switch (kind.family) {
    case WeightFamily::Equal:
      return Real(1);
    case WeightFamily::Quadratic:
      return a * b;
    case WeightFamily::SinSquared: {
      Real s = sin(pi_v<Real>() * std::min(a, b));
      return s * s;
    }
    case WeightFamily::Exponential: {
      Real s = a * b;
      Real sp = s;
      for (int i = 1; i < kind.p; ++i) sp *= s;
      if (!(sp > Real(0))) return Real(0);
      static const Real log_min = log(std::numeric_limits<Real>::min());
      Real exponent = Real(-1) / sp;
      if (exponent < log_min) return Real(0);
      return exp(exponent);
    }
  }
  return Real(0);
}

// Truncated Taylor series helpers, coefficient k holds f^(k)/k!.
template <class Real>
std::vector<Real> series_mul(const std::vector<Real>& x, const std::vector<Real>& y) {
  std::vector<Real> z(x.size(), Real(0));
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) z[k] += x[j] * y[k - j];
  return z;
}

template <class Real>
std::vector<Real> series_reciprocal(const std::vector<Real>& q) {
  std::vector<Real> r(q.size(), Real(0));
  r[0] = Real(1) / q[0];
  for (std::size_t k = 1; k < q.size(); ++k) {
    Real acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += q[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

template <class Real>
std::vector<Real> series_exp(const std::vector<Real>& u, Real e0) {
  std::vector<Real> e(u.size(), Real(0));
  e[0] = e0;
  for (std::size_t k = 1; k < u.size(); ++k) {
    Real acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += Real(static_cast<int>(j)) * u[j] * e[k - j];
    e[k] = acc / Real(static_cast<int>(k));
  }
  return e;
}

}  // namespace

template <class Real>
Real raw_weight(WeightKind kind, Real t) {
  if (kind.family == WeightFamily::Equal) return (t >= Real(0) && t <= Real(1)) ? Real(1) : Real(0);
  if (!(t > Real(0) && t < Real(1))) return Real(0);
  return weight_from_parts(kind, t, Real(1) - t);
}

template <class Real>
Real raw_weight_derivative(WeightKind kind, Real t, int m) {
  using std::cos;
  using std::exp;
  using std::log;
  if (m < 0) throw ContractError("derivative order must be >= 0");
  if (m == 0) return raw_weight(kind, t);
  if (!(t > Real(0) && t < Real(1))) return Real(0);
  switch (kind.family) {
    case WeightFamily::Equal:
      return Real(0);
    case WeightFamily::Quadratic:
      if (m == 1) return Real(1) - Real(2) * t;
      if (m == 2) return Real(-2);
      return Real(0);
    case WeightFamily::SinSquared: {
      // sin^2(pi t) = (1 - cos(2 pi t))/2
      Real scale = Real(-0.5);
      for (int i = 0; i < m; ++i) scale *= two_pi_v<Real>();
      return scale * cos(two_pi_v<Real>() * t + Real(m) * pi_v<Real>() / Real(2));
    }
    case WeightFamily::Exponential: {
      const std::size_t len = static_cast<std::size_t>(m) + 1;
      std::vector<Real> s(len, Real(0));
      s[0] = t * (Real(1) - t);
      if (len > 1) s[1] = Real(1) - Real(2) * t;
      if (len > 2) s[2] = Real(-1);
      std::vector<Real> sp = s;
      for (int i = 1; i < kind.p; ++i) sp = series_mul(sp, s);
      if (!(sp[0] > Real(0))) return Real(0);
      std::vector<Real> u = series_reciprocal(sp);
      for (auto& c : u) c = -c;
      static const Real log_min = log(std::numeric_limits<Real>::min());
      if (u[0] < log_min) return Real(0);
      std::vector<Real> e = series_exp(u, exp(u[0]));
      Real fact(1);
      for (int i = 2; i <= m; ++i) fact *= Real(i);
      return e[static_cast<std::size_t>(m)] * fact;
    }
  }
  return Real(0);
}

template <class Real>
WeightVector<Real>::WeightVector(WeightKind kind, std::vector<Real> values, Real raw_sum)
    : kind_(kind),
      values_(std::make_shared<const std::vector<Real>>(std::move(values))),
      raw_sum_(raw_sum) {}

template <class Real>
WeightVector<Real> normalized_weights(WeightKind kind, std::size_t n) {
  if (n < 2) throw ContractError("normalized_weights requires N >= 2");
  std::vector<Real> w(n);
  const Real rn = Real(static_cast<long long>(n));
  PairwiseSum<Real> sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (kind.family == WeightFamily::Equal) {
      w[i] = Real(1);
    } else if (i == 0) {
      w[i] = Real(0);
    } else {
      Real a = Real(static_cast<long long>(i)) / rn;
      Real b = Real(static_cast<long long>(n - i)) / rn;
      w[i] = weight_from_parts(kind, a, b);
    }
    sum.add(w[i]);
  }
  Real total = sum.total();
  if (!(total > Real(0))) throw ComputationError("weight sum vanished; N too small for this weight");
  if (kind.family == WeightFamily::Equal) {
    const Real each = Real(1) / rn;
    std::fill(w.begin(), w.end(), each);
  } else {
    for (auto& x : w) x /= total;
  }
  return WeightVector<Real>(kind, std::move(w), total);
}

template <class Real>
Real derivative_sup_norm(WeightKind kind, int m, std::size_t grid_points) {
  using std::abs;
  if (grid_points < 2) throw ContractError("grid needs at least 2 points");
  Real best(0);
  const Real g = Real(static_cast<long long>(grid_points));
  for (std::size_t i = 1; i < grid_points; ++i) {
    Real v = abs(raw_weight_derivative(kind, Real(static_cast<long long>(i)) / g, m));
    if (v > best) best = v;
  }
  return best;
}

#define WBIRKHOFF_INSTANTIATE(Real)                                          \
  template Real raw_weight<Real>(WeightKind, Real);                          \
  template Real raw_weight_derivative<Real>(WeightKind, Real, int);          \
  template class WeightVector<Real>;                                         \
  template WeightVector<Real> normalized_weights<Real>(WeightKind, std::size_t); \
  template Real derivative_sup_norm<Real>(WeightKind, int, std::size_t);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
