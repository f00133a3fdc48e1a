#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symineq/rational.hpp"

namespace symineq {

using Point = std::vector<Rational>;

struct Atom {
  Point point;
  Rational weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite law on Q^d.  Canonical on construction: duplicate points are merged
/// by adding weights and atoms are sorted lexicographically by point, so
/// structural equality is distribution equality.
class DiscreteDistribution {
 public:
  /// Throws std::invalid_argument when dimension is 0, a point has the wrong
  /// length, a weight is not positive, or the weights do not sum to exactly 1.
  DiscreteDistribution(std::size_t dimension, std::vector<Atom> atoms);

  static DiscreteDistribution point_mass(Point point);
  static DiscreteDistribution uniform(std::size_t dimension, std::vector<Point> points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return atoms_.size(); }
  std::span<const Atom> atoms() const { return atoms_; }

  /// Image under x -> x + shift.
  DiscreteDistribution translated(const Point& shift) const;
  /// Image under x -> factor * x; factor must be positive.
  DiscreteDistribution scaled(const Rational& factor) const;

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  std::size_t dimension_;
  std::vector<Atom> atoms_;
};

/// Law of (X_1, ..., X_k) with independent coordinates X_i ~ factors[i].
/// Each factor contributes its dimension to the product.
DiscreteDistribution product(std::span<const DiscreteDistribution> factors);

}  // namespace symineq
