#include "symineq/norm_ball.hpp"

#include <stdexcept>

namespace symineq {

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "1";
    case Norm::L2: return "2";
    case Norm::LInf: return "inf";
  }
  return "?";
}

Norm parse_norm(std::string_view text) {
  if (text == "1" || text == "l1" || text == "L1") return Norm::L1;
  if (text == "2" || text == "l2" || text == "L2") return Norm::L2;
  if (text == "inf" || text == "linf" || text == "Linf" || text == "max") return Norm::LInf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected 1, 2 or inf)");
}

NormBall::NormBall(std::size_t dimension, Norm norm, Rational radius)
    : dimension_(dimension), norm_(norm), radius_(std::move(radius)) {
  if (dimension_ == 0) throw std::invalid_argument("ball dimension must be positive");
  if (radius_ < 0) throw std::invalid_argument("ball radius must be non-negative");
}

bool NormBall::contains(std::span<const Rational> x) const {
  if (x.size() != dimension_) throw std::invalid_argument("point dimension mismatch");
  switch (norm_) {
    case Norm::LInf:
      for (const Rational& v : x)
        if (abs(v) > radius_) return false;
      return true;
    case Norm::L1: {
      Rational sum = 0;
      for (const Rational& v : x) {
        sum += abs(v);
        if (sum > radius_) return false;
      }
      return true;
    }
    case Norm::L2: {
      const Rational limit = radius_ * radius_;
      Rational sum = 0;
      for (const Rational& v : x) {
        sum += v * v;
        if (sum > limit) return false;
      }
      return true;
    }
  }
  return false;
}

Rational NormBall::rho() const {
  if (radius_ == 0) throw std::domain_error("rho undefined for a degenerate ball");
  return Rational(1, 2);
}

BallDifference::BallDifference(NormBall outer_ball, NormBall inner_ball)
    : outer(std::move(outer_ball)), inner(std::move(inner_ball)) {
  if (outer.dimension() != inner.dimension()) throw std::invalid_argument("ball difference dimension mismatch");
}

}  // namespace symineq
