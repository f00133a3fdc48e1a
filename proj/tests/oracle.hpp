#pragma once

// Independent brute-force oracles for the test suites.  They share only the
// Rational type with the library: laws are plain (point, weight) lists, the
// pair statistic is built as an explicit convolution table, and norms are
// evaluated from scratch.

#include <algorithm>
#include <map>
#include <vector>

#include "symineq/distribution.hpp"
#include "symineq/norm_ball.hpp"

namespace oracle {

using symineq::Rational;
using Vec = std::vector<Rational>;
using Law = std::vector<std::pair<Vec, Rational>>;

inline Law law_of(const symineq::DiscreteDistribution& mu) {
  Law out;
  for (const auto& atom : mu.atoms()) out.emplace_back(atom.point, atom.weight);
  return out;
}

// Distribution of X + sign * Y as a table point -> mass.
inline std::map<Vec, Rational> convolve(const Law& law, int sign) {
  std::map<Vec, Rational> table;
  for (const auto& [x, wx] : law) {
    for (const auto& [y, wy] : law) {
      Vec z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] + sign * y[k];
      table[z] += wx * wy;
    }
  }
  return table;
}

inline bool inside(const Vec& z, symineq::Norm norm, const Rational& radius) {
  Rational acc = 0;
  for (const Rational& c : z) {
    const Rational m = abs(c);
    switch (norm) {
      case symineq::Norm::L1: acc += m; break;
      case symineq::Norm::L2: acc += m * m; break;
      case symineq::Norm::LInf: acc = std::max(acc, m); break;
    }
  }
  return norm == symineq::Norm::L2 ? acc <= radius * radius : acc <= radius;
}

inline Rational mass_in(const Law& law, int sign, symineq::Norm norm, const Rational& radius) {
  Rational total = 0;
  for (const auto& [z, w] : convolve(law, sign))
    if (inside(z, norm, radius)) total += w;
  return total;
}

inline Rational sum_in(const symineq::DiscreteDistribution& mu, symineq::Norm norm, const Rational& radius) {
  return mass_in(law_of(mu), +1, norm, radius);
}

inline Rational diff_in(const symineq::DiscreteDistribution& mu, symineq::Norm norm, const Rational& radius) {
  return mass_in(law_of(mu), -1, norm, radius);
}

// Smallest integer >= q, by stepping rather than by division.
inline long ceil_by_steps(const Rational& q) {
  long n = 0;
  while (Rational(n) < q) ++n;
  while (Rational(n - 1) >= q) --n;
  return n;
}

}  // namespace oracle
