#include <algorithm>
#include <stdexcept>

#include "symineq/covering.hpp"
#include "symineq/measure.hpp"
#include "symineq/search.hpp"

namespace symineq {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (v <= 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

CheckResult compare(BigInt constant, Rational lhs, Rational rhs, bool strict) {
  CheckResult out;
  out.constant = std::move(constant);
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.strict = strict;
  out.slack = Rational(out.constant) * out.rhs - out.lhs;
  out.pass = strict ? out.slack > 0 : out.slack >= 0;
  return out;
}

// Total weight of the atoms in [lo, hi]; `points` sorted, `prefix[i]` = weight of the first i atoms.
Rational window_mass(const std::vector<Rational>& points, const std::vector<Rational>& prefix, const Rational& lo,
                     const Rational& hi) {
  const auto first = std::lower_bound(points.begin(), points.end(), lo);
  const auto last = std::upper_bound(points.begin(), points.end(), hi);
  if (first >= last) return 0;
  return prefix[static_cast<std::size_t>(last - points.begin())] - prefix[static_cast<std::size_t>(first - points.begin())];
}

// Exceptions must not escape an OpenMP region, so batch inputs are checked up front.
void validate_batch(std::span<const DiscreteDistribution> laws, std::span<const std::pair<Rational, Rational>> grid) {
  for (const auto& mu : laws)
    if (mu.dimension() != 1) throw std::invalid_argument("batch checks need one-dimensional laws");
  for (const auto& [b, a] : grid) {
    require_positive(b, "b");
    require_positive(a, "a");
  }
}

}  // namespace

CheckResult verify_theorem2(const DiscreteDistribution& mu, const Rational& b, const Rational& a) {
  if (mu.dimension() != 1) throw std::invalid_argument("interval check needs a one-dimensional law");
  require_positive(b, "b");
  require_positive(a, "a");
  return compare(ceil(Rational(2 * b / a)), prob_sum_in(mu, NormBall::interval(b)), prob_diff_in(mu, NormBall::interval(a)),
                 2 * b > a);
}

CheckResult verify_theorem1(const DiscreteDistribution& mu, const NormBall& F, const NormBall& K, PairMode mode) {
  const CoveringConstant constant = comparison_constant(F, K, mode);
  const Rational lhs = mode == PairMode::Sum ? prob_sum_in(mu, F) : prob_diff_in(mu, F);
  return compare(constant.value, lhs, prob_diff_in(mu, K), false);
}

CheckResult verify_corollary2(const DiscreteDistribution& mu, const Rational& b, const Rational& a, PairMode mode) {
  require_positive(b, "b");
  require_positive(a, "a");
  const std::size_t d = mu.dimension();
  const NormBall F(d, Norm::LInf, b);
  const NormBall K(d, Norm::LInf, a);
  const auto exponent = static_cast<unsigned long>(d);
  if (mode == PairMode::Sum)
    return compare(pow(ceil(Rational(2 * b / a)), exponent), prob_sum_in(mu, F), prob_diff_in(mu, K), 2 * b > a);
  return compare(pow(BigInt(2 * ceil(Rational(b / a)) - 1), exponent), prob_diff_in(mu, F), prob_diff_in(mu, K), b > a);
}

WitnessReport claim1_witness(const DiscreteDistribution& mu, const Rational& b, const Rational& a) {
  if (mu.dimension() != 1) throw std::invalid_argument("witness check needs a one-dimensional law");
  require_positive(a, "a");
  if (2 * b <= a) throw std::invalid_argument("witness check needs b > a/2");

  const Rational unit_b = b / a;
  const BigInt constant = ceil(Rational(2 * unit_b));
  std::vector<Rational> points;
  std::vector<Rational> prefix = {Rational(0)};
  points.reserve(mu.size());
  for (const Atom& atom : mu.atoms()) {
    points.push_back(atom.point[0] / a);
    prefix.push_back(prefix.back() + atom.weight);
  }

  WitnessReport report;
  report.witness_mass = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational& y = points[i];
    const Rational reflected = window_mass(points, prefix, -y - unit_b, -y + unit_b);
    const Rational local = window_mass(points, prefix, y - 1, y + 1);
    if (reflected < Rational(constant) * local) {
      report.witness_atoms.push_back(mu.atoms()[i].point[0]);
      report.witness_mass += mu.atoms()[i].weight;
    }
  }
  return report;
}

std::vector<CheckResult> theorem2_suite(std::span<const DiscreteDistribution> laws,
                                        std::span<const std::pair<Rational, Rational>> grid, Execution exec) {
  validate_batch(laws, grid);
  const std::size_t g = grid.size();
  std::vector<CheckResult> results(laws.size() * g);
  const auto total = static_cast<std::int64_t>(results.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::Parallel)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    results[k] = verify_theorem2(laws[k / g], grid[k % g].first, grid[k % g].second);
  }
  return results;
}

std::vector<WitnessReport> claim1_suite(std::span<const DiscreteDistribution> laws,
                                        std::span<const std::pair<Rational, Rational>> grid, Execution exec) {
  validate_batch(laws, grid);
  for (const auto& [b, a] : grid)
    if (2 * b <= a) throw std::invalid_argument("witness check needs b > a/2");
  const std::size_t g = grid.size();
  std::vector<WitnessReport> results(laws.size() * g);
  const auto total = static_cast<std::int64_t>(results.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::Parallel)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    results[k] = claim1_witness(laws[k / g], grid[k % g].first, grid[k % g].second);
  }
  return results;
}

}  // namespace symineq
