#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "symineq/measure.hpp"
#include "symineq/search.hpp"

namespace symineq {

namespace {

using Matrix = std::vector<double>;  // row-major m x m, entries 0 or 1

double quad(const Matrix& M, const std::vector<double>& w) {
  const std::size_t m = w.size();
  double total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < m; ++j) row += M[i * m + j] * w[j];
    total += w[i] * row;
  }
  return total;
}

double float_ratio(const Matrix& A, const Matrix& B, const std::vector<double>& w) { return quad(A, w) / quad(B, w); }

// Replicator ascent on w'Mw with M = A - lambda B + (lambda + 1) J, whose entries
// are all >= 1; for a symmetric positive matrix each step does not decrease the
// quadratic form and stays on the simplex.
void replicator(const Matrix& A, const Matrix& B, double lambda, std::vector<double>& w, int max_steps) {
  const std::size_t m = w.size();
  const double shift = lambda + 1;
  std::vector<double> field(m);
  for (int step = 0; step < max_steps; ++step) {
    double value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < m; ++j) row += (A[i * m + j] - lambda * B[i * m + j] + shift) * w[j];
      field[i] = row;
      value += w[i] * row;
    }
    double change = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double next = w[i] * field[i] / value;
      change = std::max(change, std::abs(next - w[i]));
      w[i] = next;
    }
    // Projection back onto the simplex against rounding drift.
    double sum = 0;
    for (double& x : w) {
      x = std::max(x, 0.0);
      sum += x;
    }
    for (double& x : w) x /= sum;
    if (change < 1e-15) break;
  }
}

struct Candidate {
  std::vector<Rational> weights;
  Rational ratio;
};

Candidate exact_candidate(std::span<const Rational> support, const std::vector<double>& w, const Rational& b,
                          const Rational& a) {
  const BigInt cap = BigInt(1) << 32;
  std::vector<Rational> weights(w.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    weights[i] = limit_denominator(from_double(std::max(w[i], 0.0)), cap);
    sum += weights[i];
  }
  if (sum == 0) {
    std::fill(weights.begin(), weights.end(), make_rational(1, static_cast<long>(w.size())));
    sum = 1;
  }
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] /= sum;
    if (weights[i] > 0) atoms.push_back({{support[i]}, weights[i]});
  }
  const DiscreteDistribution mu(1, std::move(atoms));
  const RatioResult q = ratio(mu, NormBall::interval(b), NormBall::interval(a), PairMode::Sum);
  return {std::move(weights), *q.value};
}

struct RestartOutcome {
  Candidate best;
  long iterations = 0;
  bool converged = false;
};

}  // namespace

SearchResult dinkelbach_maximize(std::span<const Rational> support, const Rational& b, const Rational& a,
                                 const SearchConfig& config) {
  const std::size_t m = support.size();
  if (m < 2) throw std::invalid_argument("search support needs at least 2 points");
  if (std::set<Rational>(support.begin(), support.end()).size() != m)
    throw std::invalid_argument("search support points must be distinct");
  if (a <= 0 || 2 * b <= a) throw std::invalid_argument("search needs b > a/2 > 0");
  if (config.restarts < 1 || config.max_iters < 1 || config.inner_iters < 1)
    throw std::invalid_argument("restarts and iteration limits must be positive");

  SearchResult result;
  result.bound = ceil(Rational(2 * b / a));
  result.seed = config.seed;
  result.restarts = config.restarts;
  for (const Rational& s : support) result.support.push_back({s});

  Matrix A(m * m), B(m * m);
  bool degenerate = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      A[i * m + j] = abs(support[i] + support[j]) <= b ? 1.0 : 0.0;
      B[i * m + j] = abs(support[i] - support[j]) <= a ? 1.0 : 0.0;
      if (B[i * m + j] == 0.0) degenerate = false;
    }
  }

  if (degenerate) {
    // B is all ones, so the ratio is w'Aw <= 1, attained by a point mass on s with |2s| <= b if one exists.
    std::vector<double> w(m, 1.0 / static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
      if (A[i * m + i] == 1.0) {
        std::fill(w.begin(), w.end(), 0.0);
        w[i] = 1.0;
        break;
      }
    }
    Candidate c = exact_candidate(support, w, b, a);
    result.weights = std::move(c.weights);
    result.exact_ratio = std::move(c.ratio);
    result.converged = true;
    return result;
  }

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
#pragma omp parallel for schedule(dynamic, 1)
  for (int restart = 0; restart < config.restarts; ++restart) {
    std::vector<double> w(m, 1.0 / static_cast<double>(m));
    if (restart > 0) {
      std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart)));
      double sum = 0;
      for (double& x : w) {
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        x = -std::log(u);
        sum += x;
      }
      for (double& x : w) x /= sum;
    }
    RestartOutcome& out = outcomes[static_cast<std::size_t>(restart)];
    out.best = exact_candidate(support, w, b, a);

    double lambda = float_ratio(A, B, w);
    for (int iter = 0; iter < config.max_iters; ++iter) {
      replicator(A, B, lambda, w, config.inner_iters);
      const double next = float_ratio(A, B, w);
      ++out.iterations;
      const bool done = next - lambda < config.tol;
      lambda = std::max(lambda, next);
      if (done) {
        out.converged = true;
        break;
      }
    }
    Candidate final_point = exact_candidate(support, w, b, a);
    if (final_point.ratio > out.best.ratio) out.best = std::move(final_point);
  }

  std::size_t best = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    result.iterations += outcomes[k].iterations;
    if (outcomes[k].best.ratio > outcomes[best].best.ratio) best = k;
  }
  result.best_restart = static_cast<int>(best);
  result.converged = outcomes[best].converged;
  result.weights = std::move(outcomes[best].best.weights);
  result.exact_ratio = std::move(outcomes[best].best.ratio);
  return result;
}

}  // namespace symineq
