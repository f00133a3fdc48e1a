#pragma once

#include "symineq/distribution.hpp"
#include "symineq/norm_ball.hpp"
#include "symineq/rational.hpp"

namespace symineq {

/// Which pair statistic a kernel evaluates: X + Y or X - Y.
enum class PairMode { Sum, Diff };

namespace kernels {

/// Reference kernel: sum over ordered atom pairs (i, j) of w_i w_j
/// [x_i +/- x_j in ball], evaluated directly in rationals.  Single-threaded,
/// kept as the oracle for pair_mass.
Rational pair_mass_reference(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode);

/// Production kernel.  Rescales coordinates and weights to a common integer
/// lattice, then runs the O(m^2) pair loop in machine integers (128-bit
/// accumulators) when magnitudes allow, falling back to GMP integers
/// otherwise.  Rows are distributed over OpenMP threads; per-row partial sums
/// are merged in row order, so the result is independent of thread count.
Rational pair_mass(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode);

/// Forces the GMP-integer path of pair_mass (exposed for testing).
Rational pair_mass_bigint(const DiscreteDistribution& mu, const NormBall& ball, PairMode mode);

}  // namespace kernels
}  // namespace symineq
