#include "wbirkhoff/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wbirkhoff/averaging.hpp"

namespace wbirkhoff {

LiftBranch parse_lift_branch(std::string_view text) {
  if (text == "nearest") return LiftBranch::Nearest;
  if (text == "forward") return LiftBranch::Forward;
  if (text == "auto") return LiftBranch::Auto;
  throw ContractError("unknown lift branch '" + std::string(text) + "' (nearest|forward|auto)");
}

std::string_view lift_branch_name(LiftBranch branch) {
  switch (branch) {
    case LiftBranch::Nearest: return "nearest";
    case LiftBranch::Forward: return "forward";
    case LiftBranch::Auto: return "auto";
  }
  return "?";
}

namespace {

// Steps r are mapped to r - 1 when r >= cut, so they land in [cut - 1, cut).
template <class Real>
struct Cut {
  Real at;
  Real gap;  // width of the empty arc around the cut
};

template <class Real>
Cut<Real> widest_gap(std::vector<Real> raw) {
  std::sort(raw.begin(), raw.end());
  Real best_gap = raw.front() + Real(1) - raw.back();
  Real best_at = unit_mod(raw.back() + best_gap / Real(2));
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    const Real g = raw[i + 1] - raw[i];
    if (g > best_gap) {
      best_gap = g;
      best_at = raw[i] + g / Real(2);
    }
  }
  return {best_at, best_gap};
}

}  // namespace

template <class Real>
AngleSequence<Real> AngleSequence<Real>::from_parts(std::size_t dim, std::vector<Real> angles,
                                                    std::vector<std::int64_t> windings,
                                                    std::vector<Real> increments, LiftBranch branch) {
  if (dim == 0) throw ContractError("angle dimension must be >= 1");
  if (angles.size() % dim != 0 || windings.size() != angles.size())
    throw ContractError("angle/winding arrays do not match dimension");
  const std::size_t n = angles.size() / dim;
  if (increments.size() != (n ? (n - 1) * dim : 0))
    throw ContractError("increment array does not match sequence length");
  AngleSequence seq;
  seq.dim_ = dim;
  seq.angles_ = std::move(angles);
  seq.windings_ = std::move(windings);
  seq.increments_ = std::move(increments);
  seq.branch_ = branch;
  return seq;
}

template <class Real>
AngleSequence<Real> build_lift(std::span<const Real> angles, std::size_t dim, LiftBranch branch,
                               WarningSink* warnings) {
  using std::abs;
  using std::llround;
  using boost::multiprecision::llround;
  if (dim == 0 || angles.size() % dim != 0) throw ContractError("angle data does not match dimension");
  const std::size_t n = angles.size() / dim;
  if (n == 0) throw ContractError("empty angle sequence");

  std::vector<Real> a(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!is_finite(angles[i])) throw ContractError("non-finite angle at index " + std::to_string(i / dim));
    a[i] = unit_mod(angles[i]);
  }
  std::vector<std::int64_t> wind(angles.size(), 0);
  std::vector<Real> inc((n - 1) * dim);

  const Real half(0.5);
  const Real tol(kLiftAmbiguity);
  // Auto: cut position per component; a narrow widest gap is itself ambiguous
  std::vector<Real> cut(dim, half);
  std::size_t ambiguous = 0, first_ambiguous = 0;
  if (branch == LiftBranch::Auto && n > 1) {
    std::vector<Real> raw(n - 1);
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t i = 0; i + 1 < n; ++i) raw[i] = unit_mod(a[(i + 1) * dim + c] - a[i * dim + c]);
      const Cut<Real> g = widest_gap(raw);
      cut[c] = g.at;
      if (g.gap < Real(2) * tol) {
        std::ostringstream msg;
        msg << "raw steps of component " << c << " cover the circle (widest gap " << static_cast<double>(g.gap)
            << "); no consistent lift";
        emit(warnings, "ambiguous-lift", msg.str());
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Real jump = a[(i + 1) * dim + c] - a[i * dim + c];
      const Real r = unit_mod(jump);
      Real step = r;
      bool near_cut = false;
      if (branch == LiftBranch::Nearest) {
        if (r > half) step = r - Real(1);
        near_cut = abs(r - half) < tol;
      } else if (branch == LiftBranch::Forward) {
        near_cut = r < tol || r > Real(1) - tol;
      } else if (r >= cut[c]) {
        step = r - Real(1);
      }
      if (near_cut && ambiguous++ == 0) first_ambiguous = i;
      inc[i * dim + c] = step;
      wind[(i + 1) * dim + c] = wind[i * dim + c] + static_cast<std::int64_t>(llround(step - jump));
    }
  }
  if (ambiguous > 0) {
    std::ostringstream msg;
    msg << ambiguous << " increment(s) within " << kLiftAmbiguity << " of the " << lift_branch_name(branch)
        << " branch cut, first at step " << first_ambiguous;
    emit(warnings, "ambiguous-lift", msg.str());
  }
  return AngleSequence<Real>::from_parts(dim, std::move(a), std::move(wind), std::move(inc), branch);
}

template <class Real>
RotationEstimate<Real> rotation_vector(const AngleSequence<Real>& seq, const WeightVector<Real>& weights) {
  if (seq.size() < 3) throw ContractError("rotation_vector needs N >= 3 angles");
  if (weights.n_terms() != seq.size() - 1)
    throw ContractError("rotation_vector weights must cover the N-1 increments");
  RotationEstimate<Real> est;
  est.rho = wb_average_rows(seq.increments(), seq.dim(), weights);
  for (auto& r : est.rho) r = unit_mod(r);
  est.n_iterates = seq.size() - 1;
  est.weight_kind = weights.kind();
  return est;
}

template <class Real>
RotationEstimate<Real> rotation_vector(const AngleSequence<Real>& seq, WeightKind kind) {
  if (seq.size() < 3) throw ContractError("rotation_vector needs N >= 3 angles");
  return rotation_vector(seq, normalized_weights<Real>(kind, seq.size() - 1));
}

template <class Real>
std::vector<Real> angular_coordinate(std::span<const Real> xy, Real cx, Real cy) {
  using std::atan2;
  if (xy.size() % 2 != 0) throw ContractError("angular_coordinate expects (x, y) pairs");
  std::vector<Real> out(xy.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Real dx = xy[2 * i] - cx, dy = xy[2 * i + 1] - cy;
    if (dx == Real(0) && dy == Real(0))
      throw ContractError("point " + std::to_string(i) + " coincides with the angular center");
    out[i] = unit_mod(atan2(dy, dx) / two_pi_v<Real>());
  }
  return out;
}

template <class Real>
Real circle_distance(Real a, Real b) {
  Real d = unit_mod(a - b);
  return d > Real(0.5) ? Real(1) - d : d;
}

template <class Real>
Real rotation_number_distance(Real estimate, Real reference) {
  using std::min;
  return min(circle_distance(estimate, reference), circle_distance(estimate, Real(1) - reference));
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                  \
  template class AngleSequence<Real>;                                                                \
  template AngleSequence<Real> build_lift<Real>(std::span<const Real>, std::size_t, LiftBranch,      \
                                                WarningSink*);                                       \
  template RotationEstimate<Real> rotation_vector<Real>(const AngleSequence<Real>&, WeightKind);    \
  template RotationEstimate<Real> rotation_vector<Real>(const AngleSequence<Real>&,                 \
                                                        const WeightVector<Real>&);                 \
  template std::vector<Real> angular_coordinate<Real>(std::span<const Real>, Real, Real);           \
  template Real circle_distance<Real>(Real, Real);                                                   \
  template Real rotation_number_distance<Real>(Real, Real);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
