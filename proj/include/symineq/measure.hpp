#pragma once

#include <optional>

#include "symineq/distribution.hpp"
#include "symineq/kernels.hpp"
#include "symineq/norm_ball.hpp"

namespace symineq {

/// P(X + Y in F) for X, Y i.i.d. ~ mu.  Boundary points count as inside.
/// Throws std::invalid_argument on a dimension mismatch.
Rational prob_sum_in(const DiscreteDistribution& mu, const NormBall& F);

/// P(X - Y in K) for X, Y i.i.d. ~ mu.
Rational prob_diff_in(const DiscreteDistribution& mu, const NormBall& K);

/// Quotient of two pair probabilities.  `value` is empty when the
/// denominator vanishes; the numerator is still reported so a caller can
/// flag numerator > 0 as a bound violation.
struct RatioResult {
  Rational numerator;
  Rational denominator;
  std::optional<Rational> value;

  bool defined() const { return value.has_value(); }
};

/// Sum mode: P(X+Y in F) / P(X-Y in K).  Diff mode: P(X-Y in F) / P(X-Y in K).
RatioResult ratio(const DiscreteDistribution& mu, const NormBall& F, const NormBall& K, PairMode mode);

}  // namespace symineq
