#include "symineq/kernels.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symineq::kernels {

namespace {

void check_dimensions(const DiscreteDistribution& mu, const NormBall& ball) {
  if (mu.dimension() != ball.dimension())
    throw std::invalid_argument("distribution has dimension " + std::to_string(mu.dimension()) +
                                " but ball has dimension " + std::to_string(ball.dimension()));
}

// Row loops below this many atoms are not worth a parallel region.
constexpr std::size_t kParallelThreshold = 96;

// Integer image of a distribution: x = coords / coord_scale, w = weights / weight_scale.
struct Lattice {
  std::size_t m = 0;
  std::size_t d = 0;
  BigInt coord_scale = 1;
  BigInt weight_scale = 1;
  std::vector<BigInt> coords;  // row-major m x d
  std::vector<BigInt> weights;
};

Lattice to_lattice(const DiscreteDistribution& mu) {
  Lattice lat;
  lat.m = mu.size();
  lat.d = mu.dimension();
  for (const Atom& atom : mu.atoms()) {
    for (const Rational& x : atom.point) mpz_lcm(lat.coord_scale.get_mpz_t(), lat.coord_scale.get_mpz_t(), x.get_den_mpz_t());
    mpz_lcm(lat.weight_scale.get_mpz_t(), lat.weight_scale.get_mpz_t(), atom.weight.get_den_mpz_t());
  }
  lat.coords.reserve(lat.m * lat.d);
  lat.weights.reserve(lat.m);
  for (const Atom& atom : mu.atoms()) {
    for (const Rational& x : atom.point) lat.coords.push_back(x.get_num() * (lat.coord_scale / x.get_den()));
    lat.weights.push_back(atom.weight.get_num() * (lat.weight_scale / atom.weight.get_den()));
  }
  return lat;
}

// Largest integer norm value that still lies in the ball, on the lattice scale.
// For l2 the comparison is on squared norms.
BigInt integer_threshold(const NormBall& ball, const BigInt& coord_scale) {
  Rational scaled = ball.radius() * Rational(coord_scale);
  if (ball.norm() == Norm::L2) scaled *= scaled;
  return floor(scaled);
}

Rational finish(const BigInt& total, const BigInt& weight_scale) {
  return make_rational(total, BigInt(weight_scale * weight_scale));
}

// ---- machine-integer path -------------------------------------------------

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;
constexpr std::size_t kMaxFastDimension = 64;

template <Norm N>
inline bool inside_fast(const std::int64_t* xi, const std::int64_t* xj, std::size_t d, std::int64_t sign,
                        __int128 threshold) {
  __int128 acc = 0;
  for (std::size_t k = 0; k < d; ++k) {
    __int128 v = static_cast<__int128>(xi[k]) + sign * xj[k];
    if (v < 0) v = -v;
    if constexpr (N == Norm::LInf) {
      if (v > threshold) return false;
    } else if constexpr (N == Norm::L1) {
      acc += v;
      if (acc > threshold) return false;
    } else {
      acc += v * v;
      if (acc > threshold) return false;
    }
  }
  return true;
}

template <Norm N>
BigInt pair_total_fast(const std::vector<std::int64_t>& coords, const std::vector<std::int64_t>& weights,
                       std::size_t m, std::size_t d, std::int64_t sign, __int128 threshold) {
  std::vector<__int128> row_total(m, 0);
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8) if (m >= kParallelThreshold)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int64_t* xi = coords.data() + static_cast<std::size_t>(i) * d;
    __int128 mass = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (inside_fast<N>(xi, coords.data() + j * d, d, sign, threshold)) mass += weights[j];
    }
    row_total[static_cast<std::size_t>(i)] = mass * weights[static_cast<std::size_t>(i)];
  }
  __int128 total = 0;
  for (__int128 t : row_total) total += t;
  return from_int128(total);
}

bool fits_fast_path(const Lattice& lat) {
  if (lat.d > kMaxFastDimension) return false;
  if (!lat.weight_scale.fits_slong_p()) return false;
  for (const BigInt& c : lat.coords)
    if (abs(c) >= kCoordLimit) return false;
  return true;
}

// ---- GMP-integer path -----------------------------------------------------

bool inside_big(const BigInt* xi, const BigInt* xj, std::size_t d, bool sum, Norm norm, const BigInt& threshold,
                BigInt& v, BigInt& acc) {
  acc = 0;
  for (std::size_t k = 0; k < d; ++k) {
    if (sum)
      mpz_add(v.get_mpz_t(), xi[k].get_mpz_t(), xj[k].get_mpz_t());
    else
      mpz_sub(v.get_mpz_t(), xi[k].get_mpz_t(), xj[k].get_mpz_t());
    mpz_abs(v.get_mpz_t(), v.get_mpz_t());
    switch (norm) {
      case Norm::LInf:
        if (v > threshold) return false;
        break;
      case Norm::L1:
        acc += v;
        if (acc > threshold) return false;
        break;
      case Norm::L2:
        mpz_addmul(acc.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
        if (acc > threshold) return false;
        break;
    }
  }
  return true;
}

BigInt pair_total_big(const Lattice& lat, PairMode mode, Norm norm, const BigInt& threshold) {
  const std::size_t m = lat.m;
  const std::size_t d = lat.d;
  std::vector<BigInt> row_total(m);
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8) if (m >= kParallelThreshold)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto row = static_cast<std::size_t>(i);
    BigInt v, acc, mass = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (inside_big(&lat.coords[row * d], &lat.coords[j * d], d, mode == PairMode::Sum, norm, threshold, v, acc))
        mass += lat.weights[j];
    }
    row_total[row] = mass * lat.weights[row];
  }
  BigInt total = 0;
  for (const BigInt& t : row_total) total += t;
  return total;
}

}  // namespace

Rational pair_mass_reference(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode) {
  check_dimensions(mu, ball);
  const auto atoms = mu.atoms();
  Rational total = 0;
  Point combined(mu.dimension());
  for (const Atom& xi : atoms) {
    for (const Atom& xj : atoms) {
      for (std::size_t k = 0; k < combined.size(); ++k)
        combined[k] = mode == PairMode::Sum ? Rational(xi.point[k] + xj.point[k]) : Rational(xi.point[k] - xj.point[k]);
      if (ball.contains(combined)) total += xi.weight * xj.weight;
    }
  }
  return total;
}

Rational pair_mass_bigint(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode) {
  check_dimensions(mu, ball);
  const Lattice lat = to_lattice(mu);
  const BigInt threshold = integer_threshold(ball, lat.coord_scale);
  return finish(pair_total_big(lat, mode, ball.norm(), threshold), lat.weight_scale);
}

Rational pair_mass(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode) {
  check_dimensions(mu, ball);
  const Lattice lat = to_lattice(mu);
  const BigInt threshold = integer_threshold(ball, lat.coord_scale);
  if (!fits_fast_path(lat)) return finish(pair_total_big(lat, mode, ball.norm(), threshold), lat.weight_scale);

  std::vector<std::int64_t> coords;
  coords.reserve(lat.coords.size());
  for (const BigInt& c : lat.coords) coords.push_back(c.get_si());
  std::vector<std::int64_t> weights;
  weights.reserve(lat.m);
  for (const BigInt& w : lat.weights) weights.push_back(w.get_si());

  // Any norm value of a sum of two lattice points is below 2^100 on the fast path.
  const BigInt cap = BigInt(1) << 100;
  const BigInt clipped = threshold > cap ? cap : threshold;
  const __int128 t = static_cast<__int128>(static_cast<std::uint64_t>(BigInt(clipped >> 64).get_ui())) << 64 |
                     static_cast<__int128>(BigInt(clipped & BigInt("18446744073709551615")).get_ui());
  const std::int64_t sign = mode == PairMode::Sum ? 1 : -1;

  BigInt total;
  switch (ball.norm()) {
    case Norm::LInf: total = pair_total_fast<Norm::LInf>(coords, weights, lat.m, lat.d, sign, t); break;
    case Norm::L1: total = pair_total_fast<Norm::L1>(coords, weights, lat.m, lat.d, sign, t); break;
    case Norm::L2: total = pair_total_fast<Norm::L2>(coords, weights, lat.m, lat.d, sign, t); break;
  }
  return finish(total, lat.weight_scale);
}

}  // namespace symineq::kernels
