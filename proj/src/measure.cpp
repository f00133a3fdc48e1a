#include "symineq/measure.hpp"

#include <stdexcept>

namespace symineq {

Rational prob_sum_in(const DiscreteDistribution& mu, const NormBall& F) {
  return kernels::pair_mass(mu, F, PairMode::Sum);
}

Rational prob_diff_in(const DiscreteDistribution& mu, const NormBall& K) {
  return kernels::pair_mass(mu, K, PairMode::Diff);
}

RatioResult ratio(const DiscreteDistribution& mu, const NormBall& F, const NormBall& K, PairMode mode) {
  if (F.dimension() != K.dimension()) throw std::invalid_argument("F and K dimensions differ");
  RatioResult out;
  out.numerator = mode == PairMode::Sum ? prob_sum_in(mu, F) : prob_diff_in(mu, F);
  out.denominator = prob_diff_in(mu, K);
  if (out.denominator != 0) out.value = out.numerator / out.denominator;
  return out;
}

}  // namespace symineq
