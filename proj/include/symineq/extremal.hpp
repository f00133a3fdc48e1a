#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symineq/distribution.hpp"
#include "symineq/rational.hpp"

namespace symineq {

/// Parameters of the sharpness family: 2n equally weighted atoms
///   i (1 + epsilon) a          for i = 1, ..., n
///   i (1 + epsilon) a - r      for i = 0, -1, ..., -n + 1
/// with 0 < r <= a (1 + epsilon) / 2.  The sum window is fixed at b = 1.
struct ExtremalParams {
  long n;
  Rational a;
  Rational epsilon;
  Rational r;

  /// Throws std::invalid_argument unless n >= 1, a > 0, epsilon > 0 and
  /// 0 < r <= a (1 + epsilon) / 2.
  void validate() const;
  /// Atom spacing (1 + epsilon) a.
  Rational step() const { return (1 + epsilon) * a; }
  /// The atom with index i, -n + 1 <= i <= n.
  Rational atom(long i) const;
};

DiscreteDistribution build_extremal(const ExtremalParams& params);

struct ChosenParams {
  Rational epsilon;
  Rational r;
  int regime;  ///< 1: k < 1/a <= k + 1/2 (small r);  2: k + 1/2 < 1/a <= k + 1 (r = a/2)
  BigInt k;    ///< the integer with k < 1/a <= k + 1
};

/// Picks (epsilon, r) so the limiting ratio equals ceil(2/a).  epsilon is the
/// largest power of 1/2 not above 1/100 for which the floor identity holds.
/// Throws std::logic_error if no epsilon >= 2^-64 works.
ChosenParams choose_params(const Rational& a);

/// 1 + floor((1 - r) / ((1 + epsilon) a)) + floor((1 + r) / ((1 + epsilon) a)).
BigInt predicted_limit(const Rational& a, const Rational& epsilon, const Rational& r);

/// Sizes of the index sets
///   I1 = {i : -x_0 + 1 <= x_i <= -x_{-n+1} - 1}
///   I2 = {i : -x_n + 1 <= x_i <= -x_1 - 1}
/// from the closed forms and from direct enumeration of the atoms.  Negative
/// closed-form values (small n) are clamped to 0 and flagged.
struct IndexCounts {
  BigInt formula_i1;  ///< before clamping
  BigInt formula_i2;
  long i1 = 0;  ///< enumerated
  long i2 = 0;
  long i3 = 0;  ///< 2n - i1 - i2
  bool clamped = false;
};

/// Throws std::logic_error if the clamped closed forms disagree with enumeration.
IndexCounts predicted_index_counts(const ExtremalParams& params);

/// Number of atoms in [-x_i - 1, -x_i + 1] predicted for i in I1 ∪ I2:
/// 1 + floor((1 - r)/((1+epsilon) a)) + floor((1 + r)/((1+epsilon) a)).
long predicted_window_count(const ExtremalParams& params);

/// Atom count of [-x_i - 1, -x_i + 1] by direct enumeration.
long window_count(const ExtremalParams& params, long i);

struct ConvergenceRow {
  long n;
  Rational ratio;  ///< P(|X+Y| <= 1) / P(|X-Y| <= a), exact
  BigInt limit;
  Rational gap;  ///< limit - ratio
};

struct ConvergenceTable {
  Rational a;
  Rational epsilon;
  Rational r;
  int regime;
  BigInt limit;
  bool strict;  ///< 1 > a/2: the ratio must stay strictly below the limit
  std::vector<ConvergenceRow> rows;  ///< ordered by n
  std::optional<long> n0;  ///< smallest n from which every ratio exceeds limit - 1
  Rational fitted_rate;  ///< max over rows of gap * n (empirical C in gap <= C/n)

  bool below_limit() const;
  bool gaps_non_increasing() const;  ///< over rows with n >= n0
  bool passes() const { return below_limit() && gaps_non_increasing(); }
};

/// One row per n (computed concurrently, emitted in increasing n).
/// Parameters from choose_params unless overridden.
ConvergenceTable convergence_table(const Rational& a, std::vector<long> n_values,
                                   std::optional<ChosenParams> override_params = std::nullopt);

/// Header: n,ratio_num,ratio_den,ratio_decimal,predicted_limit,gap_decimal
std::string to_csv(const ConvergenceTable& table);

}  // namespace symineq
