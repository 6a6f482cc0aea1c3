#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/weights.hpp"

namespace wbirkhoff {

// Which representative of (a_{n+1} - a_n mod 1) counts as the step.
//   Nearest: (-1/2, 1/2]   Forward: [0, 1)
//   Auto: per component, the cut goes in the middle of the widest gap
//         between observed raw steps. A lifted circle map has its steps in
//         one interval shorter than 1, which this recovers whenever the
//         orbit samples that interval densely enough.
enum class LiftBranch { Nearest, Forward, Auto };

LiftBranch parse_lift_branch(std::string_view text);
std::string_view lift_branch_name(LiftBranch branch);

// Angles in [0,1)^d with an unwrapped lift. The lift is stored as an integer
// winding plus the angle, so it keeps full precision for long orbits.
template <class Real>
class AngleSequence {
 public:
  AngleSequence() = default;

  static AngleSequence from_parts(std::size_t dim, std::vector<Real> angles,
                                  std::vector<std::int64_t> windings, std::vector<Real> increments,
                                  LiftBranch branch);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ ? angles_.size() / dim_ : 0; }
  LiftBranch branch() const { return branch_; }

  Real angle(std::size_t n, std::size_t c = 0) const { return angles_[n * dim_ + c]; }
  std::int64_t winding(std::size_t n, std::size_t c = 0) const { return windings_[n * dim_ + c]; }
  Real lift(std::size_t n, std::size_t c = 0) const {
    return Real(static_cast<long long>(winding(n, c))) + angle(n, c);
  }
  // lift_{n+1} - lift_n, n < size() - 1
  Real increment(std::size_t n, std::size_t c = 0) const { return increments_[n * dim_ + c]; }

  std::span<const Real> angles() const { return angles_; }
  std::span<const std::int64_t> windings() const { return windings_; }
  std::span<const Real> increments() const { return increments_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Real> angles_;
  std::vector<std::int64_t> windings_;
  std::vector<Real> increments_;
  LiftBranch branch_ = LiftBranch::Nearest;
};

// Increments within this distance of the branch cut raise "ambiguous-lift".
inline constexpr double kLiftAmbiguity = 1e-6;

// angles: row-major, size = N * dim; entries are reduced mod 1.
template <class Real>
AngleSequence<Real> build_lift(std::span<const Real> angles, std::size_t dim = 1,
                               LiftBranch branch = LiftBranch::Nearest,
                               WarningSink* warnings = nullptr);

template <class Real>
struct RotationEstimate {
  std::vector<Real> rho;       // each component in [0,1)
  std::size_t n_iterates = 0;  // number of averaged increments
  WeightKind weight_kind;
  PrecisionTier precision_tier = TierTraits<Real>::tier;
};

template <class Real>
RotationEstimate<Real> rotation_vector(const AngleSequence<Real>& seq, WeightKind kind);

// weights.n_terms() must equal seq.size() - 1
template <class Real>
RotationEstimate<Real> rotation_vector(const AngleSequence<Real>& seq,
                                       const WeightVector<Real>& weights);

// atan2(y - cy, x - cx) / 2pi mod 1 for row-major (x, y) pairs.
template <class Real>
std::vector<Real> angular_coordinate(std::span<const Real> xy, Real cx, Real cy);

// Distance on the unit circle.
template <class Real>
Real circle_distance(Real a, Real b);

// Rotation numbers are only defined up to orientation, rho ~ 1 - rho.
template <class Real>
Real rotation_number_distance(Real estimate, Real reference);

}  // namespace wbirkhoff
