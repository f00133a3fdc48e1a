#include "symineq/distribution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symineq {

DiscreteDistribution::DiscreteDistribution(std::size_t dimension, std::vector<Atom> atoms)
    : dimension_(dimension) {
  if (dimension == 0) throw std::invalid_argument("distribution dimension must be positive");
  if (atoms.empty()) throw std::invalid_argument("distribution needs at least one atom");
  Rational total = 0;
  for (const Atom& atom : atoms) {
    if (atom.point.size() != dimension)
      throw std::invalid_argument("atom has " + std::to_string(atom.point.size()) +
                                  " coordinates, expected " + std::to_string(dimension));
    if (atom.weight <= 0) throw std::invalid_argument("atom weight must be positive, got " + to_string(atom.weight));
    total += atom.weight;
  }
  if (total != 1) throw std::invalid_argument("weights sum to " + to_string(total) + ", expected 1");

  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.point < y.point; });
  for (Atom& atom : atoms) {
    if (!atoms_.empty() && atoms_.back().point == atom.point) {
      atoms_.back().weight += atom.weight;
    } else {
      atoms_.push_back(std::move(atom));
    }
  }
}

DiscreteDistribution DiscreteDistribution::point_mass(Point point) {
  const std::size_t d = point.size();
  std::vector<Atom> atoms;
  atoms.push_back({std::move(point), Rational(1)});
  return DiscreteDistribution(d, std::move(atoms));
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t dimension, std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("uniform distribution over an empty set");
  const Rational w = make_rational(1, static_cast<long>(points.size()));
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  for (Point& p : points) atoms.push_back({std::move(p), w});
  return DiscreteDistribution(dimension, std::move(atoms));
}

DiscreteDistribution DiscreteDistribution::translated(const Point& shift) const {
  if (shift.size() != dimension_) throw std::invalid_argument("shift dimension mismatch");
  std::vector<Atom> moved(atoms_.begin(), atoms_.end());
  for (Atom& atom : moved)
    for (std::size_t k = 0; k < dimension_; ++k) atom.point[k] += shift[k];
  return DiscreteDistribution(dimension_, std::move(moved));
}

DiscreteDistribution DiscreteDistribution::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Atom> moved(atoms_.begin(), atoms_.end());
  for (Atom& atom : moved)
    for (Rational& x : atom.point) x *= factor;
  return DiscreteDistribution(dimension_, std::move(moved));
}

DiscreteDistribution product(std::span<const DiscreteDistribution> factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero factors");
  std::vector<Atom> acc = {Atom{{}, Rational(1)}};
  std::size_t dimension = 0;
  for (const DiscreteDistribution& factor : factors) {
    std::vector<Atom> next;
    next.reserve(acc.size() * factor.size());
    for (const Atom& left : acc) {
      for (const Atom& right : factor.atoms()) {
        Atom joined{left.point, left.weight * right.weight};
        joined.point.insert(joined.point.end(), right.point.begin(), right.point.end());
        next.push_back(std::move(joined));
      }
    }
    acc = std::move(next);
    dimension += factor.dimension();
  }
  return DiscreteDistribution(dimension, std::move(acc));
}

}  // namespace symineq
