#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symineq/distribution.hpp"
#include "symineq/kernels.hpp"
#include "symineq/norm_ball.hpp"

namespace symineq {

/// Interval on the line with optionally open endpoints.
struct Interval1d {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
  bool contains(const Rational& x) const {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
  friend bool operator==(const Interval1d&, const Interval1d&) = default;
};

/// Disjoint intervals in increasing order.
using IntervalSet = std::vector<Interval1d>;

/// Sets that can be covered: a ball, a ball with a smaller ball removed, or a
/// 1-d interval set.
using CoverTarget = std::variant<NormBall, BallDifference, IntervalSet>;

std::size_t target_dimension(const CoverTarget& target);
bool target_contains(const CoverTarget& target, std::span<const Rational> x);

/// Centers c_i with target ⊆ ∪ (c_i + rho K).  bound() is an upper bound on
/// N(target, K, rho).  `verification` is "exact" when containment was checked
/// by interval/box arithmetic, or "grid:<pitch>" when it was checked on the
/// points of a grid with that pitch.
struct CoveringCertificate {
  std::vector<Point> centers;
  CoverTarget target;
  NormBall K;
  Rational rho;
  bool verified = false;
  std::string verification;

  std::size_t bound() const { return centers.size(); }
};

/// Thrown by lattice_cover_upper_bound when the requested pitch cannot
/// guarantee coverage.
class PitchTooLarge : public std::invalid_argument {
 public:
  PitchTooLarge(const Rational& requested, Rational max_pitch);
  const Rational& max_pitch() const { return max_pitch_; }

 private:
  Rational max_pitch_;
};

/// Exact N([-b, b], [-a, a], rho) = ceil(b / (rho a)).
BigInt covering_number_interval(const Rational& b, const Rational& a, const Rational& rho);

/// Exact N(B_inf(b), B_inf(a), 1/2) = ceil(2b / a)^d in R^d.
BigInt covering_number_linf_box(const Rational& b, const Rational& a, std::size_t d);

/// 2 ceil(b/a) - 1.  Cross-checked against a greedy cover of
/// [-b, -a) ∪ (a, b] by intervals of length a; a mismatch throws std::logic_error.
BigInt annulus_constant_1d(const Rational& b, const Rational& a);

/// Left-to-right greedy cover of [lo, hi] by closed intervals of length
/// 2 rho half_width.  Optimal on the line.  lo > hi gives zero centers.
CoveringCertificate greedy_cover_1d(const Rational& lo, const Rational& hi, const Rational& half_width,
                                    const Rational& rho);

/// Greedy cover of an arbitrary interval set (open endpoints respected).
CoveringCertificate greedy_cover_intervals(IntervalSet target, const Rational& half_width, const Rational& rho);

/// Largest admissible lattice pitch: the l_inf inradius of rho K.  For l2 in
/// dimensions that are not perfect squares this is a rational lower bound.
Rational max_lattice_pitch(const NormBall& K, const Rational& rho);

/// Centers on pitch * Z^d whose l_inf cell meets the target (d <= 4).  Every
/// cell fits inside its translate of rho K, so the cover is valid whenever
/// pitch <= max_lattice_pitch(K, rho); larger pitches throw PitchTooLarge.
/// Redundant centers are pruned when containment can be verified exactly.
CoveringCertificate lattice_cover_upper_bound(const CoverTarget& target, const NormBall& K, const Rational& rho,
                                              const Rational& pitch);

/// L with N(F, K, rho) >= ceil(L): vol(F) / vol(rho K).  Exact for l1/l_inf;
/// l2 volumes use a rational enclosure of pi rounded in the safe direction.
Rational volume_lower_bound(const NormBall& F, const NormBall& K, const Rational& rho);

/// Re-checks target ⊆ ∪ (c + rho K).  Sets `verified` and `verification`.
void verify_certificate(CoveringCertificate& certificate);

/// Constant used by the general comparison inequality: N(F, K, 1/2) in sum mode,
/// N(F \ K, K, 1/2) + 1 in diff mode.  Exact where a closed form exists
/// (1-d, l_inf boxes in sum mode), otherwise a lattice certificate bound.
struct CoveringConstant {
  BigInt value;
  bool exact = false;
  std::string source;
};
CoveringConstant comparison_constant(const NormBall& F, const NormBall& K, PairMode mode);

}  // namespace symineq
