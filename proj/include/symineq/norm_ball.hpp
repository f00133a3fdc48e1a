#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "symineq/rational.hpp"

namespace symineq {

enum class Norm { L1, L2, LInf };

std::string to_string(Norm norm);
/// "1", "2", "inf" (also "l1", "l2", "linf").
Norm parse_norm(std::string_view text);

/// Closed centered ball {x : |x|_p <= radius} in Q^d.
class NormBall {
 public:
  NormBall(std::size_t dimension, Norm norm, Rational radius);

  static NormBall interval(Rational half_width) { return NormBall(1, Norm::LInf, std::move(half_width)); }

  std::size_t dimension() const { return dimension_; }
  Norm norm() const { return norm_; }
  const Rational& radius() const { return radius_; }

  /// Exact.  The l2 case compares squared norms, so no square roots appear.
  bool contains(std::span<const Rational> x) const;

  /// r(K): radius of the largest centered ball of the same norm inside K.
  const Rational& inner_radius() const { return radius_; }
  /// d(K) measured in the ball's own norm.
  Rational diameter() const { return radius_ * 2; }
  /// r(K) / d(K); 1/2 for every nondegenerate ball.
  Rational rho() const;

  NormBall with_radius(Rational radius) const { return NormBall(dimension_, norm_, std::move(radius)); }

  friend bool operator==(const NormBall&, const NormBall&) = default;

 private:
  std::size_t dimension_;
  Norm norm_;
  Rational radius_;
};

/// outer \ inner: membership means inside outer and outside inner.
struct BallDifference {
  NormBall outer;
  NormBall inner;

  BallDifference(NormBall outer_ball, NormBall inner_ball);
  bool contains(std::span<const Rational> x) const { return outer.contains(x) && !inner.contains(x); }

  friend bool operator==(const BallDifference&, const BallDifference&) = default;
};

}  // namespace symineq
