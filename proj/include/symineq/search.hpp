#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symineq/distribution.hpp"
#include "symineq/kernels.hpp"
#include "symineq/norm_ball.hpp"
#include "symineq/rational.hpp"

namespace symineq {

// ---------------------------------------------------------------------------
// Exact inequality checks
// ---------------------------------------------------------------------------

/// lhs <= constant * rhs (or < when strict), evaluated exactly.
struct CheckResult {
  bool pass = false;
  bool strict = false;
  BigInt constant;
  Rational lhs;  ///< P(X + Y in F), or P(X - Y in F) in diff mode
  Rational rhs;  ///< P(X - Y in K)
  Rational slack;  ///< constant * rhs - lhs
};

/// P(|X+Y| <= b) vs ceil(2b/a) P(|X-Y| <= a) for a 1-d law.  Strict when
/// b > a/2, non-strict otherwise.
CheckResult verify_theorem2(const DiscreteDistribution& mu, const Rational& b, const Rational& a);

/// P(X+Y in F) <= N(F, K, 1/2) P(X-Y in K) (sum mode) or
/// P(X-Y in F) <= [N(F\K, K, 1/2) + 1] P(X-Y in K) (diff mode), non-strict.
/// The constant comes from comparison_constant (exact or a certified bound).
CheckResult verify_theorem1(const DiscreteDistribution& mu, const NormBall& F, const NormBall& K, PairMode mode);

/// l_inf comparison in R^d for laws with independent coordinates.
/// Sum mode: constant ceil(2b/a)^d, strict when b > a/2.
/// Diff mode: constant (2 ceil(b/a) - 1)^d, strict when b > a.
CheckResult verify_corollary2(const DiscreteDistribution& mu, const Rational& b, const Rational& a, PairMode mode);

// ---------------------------------------------------------------------------
// Witness set of the one-variable reduction
// ---------------------------------------------------------------------------

/// Atoms x with mu_b(-x) < ceil(2b/a) mu_a(x), where mu_r(x) = mu([x - r, x + r]).
struct WitnessReport {
  std::vector<Rational> witness_atoms;
  Rational witness_mass;

  bool holds() const { return witness_mass > 0; }
};

/// Requires a 1-d law and b > a/2 > 0.  Atoms are rescaled by 1/a so the
/// comparison runs with unit window mu_1.
WitnessReport claim1_witness(const DiscreteDistribution& mu, const Rational& b, const Rational& a);

// ---------------------------------------------------------------------------
// Random laws
// ---------------------------------------------------------------------------

struct RandomDistributionConfig {
  std::size_t dimension = 1;
  std::size_t max_atoms = 12;
  Rational box = 3;  ///< coordinates lie in [-box, box]
  long coordinate_denominator = 4;  ///< coordinates are k/q with 1 <= q <= this
  long weight_denominator_bound = 16;  ///< integer weight parts drawn from [1, bound]
};

/// Deterministic in (seed, config).  Atom count uniform in [1, max_atoms]
/// (fewer after merging duplicates); weights are an exact normalization of
/// integer parts.
DiscreteDistribution random_distribution(std::uint64_t seed, const RandomDistributionConfig& config = {});

/// splitmix64 finalizer; used to derive independent streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// ---------------------------------------------------------------------------
// Adversarial search over the simplex
// ---------------------------------------------------------------------------

struct SearchConfig {
  int restarts = 32;
  int max_iters = 200;  ///< Dinkelbach (outer) iterations per restart
  int inner_iters = 5000;  ///< replicator steps per outer iteration
  double tol = 1e-10;  ///< stop when the ratio improves by less than this
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::vector<Point> support;
  std::vector<Rational> weights;  ///< aligned with support, exact, sum to 1
  Rational exact_ratio;
  BigInt bound;  ///< ceil(2b/a)
  long iterations = 0;  ///< outer iterations summed over restarts
  int restarts = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  int best_restart = 0;
};

/// Maximizes (w'Aw)/(w'Bw) over the simplex with A_ij = [|s_i + s_j| <= b] and
/// B_ij = [|s_i - s_j| <= a].  Dinkelbach outer loop; the parametric problem
/// max w'(A - lambda B)w is attacked by replicator ascent from random starts.
/// The best weights are rounded to denominators <= 2^32, renormalized, and
/// the ratio is recomputed exactly.  The result is a lower bound on the true
/// maximum and is deterministic in config.seed.
SearchResult dinkelbach_maximize(std::span<const Rational> support, const Rational& b, const Rational& a,
                                 const SearchConfig& config = {});

// ---------------------------------------------------------------------------
// Monte Carlo for continuous laws
// ---------------------------------------------------------------------------

enum class Law { Normal, Uniform, Exponential };
std::string to_string(Law law);
Law parse_law(std::string_view text);

struct MonteCarloResult {
  Law law;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t sum_hits = 0;  ///< pairs with |X + Y| <= b
  std::uint64_t diff_hits = 0;  ///< pairs with |X - Y| <= a
  double p_sum = 0, p_diff = 0;
  double radius_sum = 0, radius_diff = 0;  ///< 99% normal-approximation radii
  double ratio = 0, ratio_lower = 0, ratio_upper = 0;
  BigInt bound;  ///< ceil(2b/a)
  bool inconclusive = false;  ///< no difference hits
  bool violation = false;  ///< ratio_lower > bound

  bool passes() const { return !inconclusive && !violation; }
};

inline constexpr double kZ99 = 2.5758293035489004;

/// Estimates P(|X+Y| <= b) and P(|X-Y| <= a) from `samples` i.i.d. pairs.
/// Samples are drawn in fixed-size chunks with per-chunk seeds, so the
/// result does not depend on the thread count.  Requires samples >= 10^4.
MonteCarloResult monte_carlo_check(Law law, const Rational& b, const Rational& a, std::uint64_t samples,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Batch property runs
// ---------------------------------------------------------------------------

enum class Execution { Serial, Parallel };

/// verify_theorem2 for every (law, (b, a)) pair; result index is
/// law_index * grid.size() + grid_index regardless of execution mode.
std::vector<CheckResult> theorem2_suite(std::span<const DiscreteDistribution> laws,
                                        std::span<const std::pair<Rational, Rational>> grid, Execution exec);

/// claim1_witness for every (law, (b, a)) pair, same indexing.
std::vector<WitnessReport> claim1_suite(std::span<const DiscreteDistribution> laws,
                                        std::span<const std::pair<Rational, Rational>> grid, Execution exec);

}  // namespace symineq
