#include "symineq/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symineq/measure.hpp"

namespace symineq {

void ExtremalParams::validate() const {
  if (n < 1) throw std::invalid_argument("extremal n must be >= 1");
  if (a <= 0) throw std::invalid_argument("extremal a must be positive");
  if (epsilon <= 0) throw std::invalid_argument("extremal epsilon must be positive");
  if (r <= 0 || r > a * (1 + epsilon) / 2)
    throw std::invalid_argument("extremal r must satisfy 0 < r <= a(1+epsilon)/2, got r = " + to_string(r));
}

Rational ExtremalParams::atom(long i) const {
  if (i < -n + 1 || i > n) throw std::out_of_range("extremal atom index out of range");
  Rational x = step() * i;
  if (i <= 0) x -= r;
  return x;
}

DiscreteDistribution build_extremal(const ExtremalParams& params) {
  params.validate();
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(2 * params.n));
  for (long i = -params.n + 1; i <= params.n; ++i) points.push_back({params.atom(i)});
  auto mu = DiscreteDistribution::uniform(1, std::move(points));
  if (static_cast<long>(mu.size()) != 2 * params.n) throw std::logic_error("extremal atoms are not distinct");
  return mu;
}

BigInt predicted_limit(const Rational& a, const Rational& epsilon, const Rational& r) {
  const Rational step = (1 + epsilon) * a;
  return 1 + floor((1 - r) / step) + floor((1 + r) / step);
}

ChosenParams choose_params(const Rational& a) {
  if (a <= 0) throw std::invalid_argument("a must be positive");
  const Rational inv = 1 / a;
  ChosenParams out;
  out.k = ceil(inv) - 1;
  const Rational k(out.k);
  if (inv <= k + Rational(1, 2)) {
    out.regime = 1;
    out.r = std::min(Rational(a / 8), Rational((1 - k * a) / 2));
  } else {
    out.regime = 2;
    out.r = a / 2;
  }
  const BigInt target = ceil(Rational(2 / a));
  Rational eps = make_rational(1, 128);
  const Rational smallest = make_rational(BigInt(1), BigInt(1) << 64);
  while (eps >= smallest) {
    if (out.r <= a * (1 + eps) / 2 && predicted_limit(a, eps, out.r) == target) {
      out.epsilon = eps;
      return out;
    }
    eps /= 2;
  }
  throw std::logic_error("no epsilon >= 2^-64 reproduces ceil(2/a) for a = " + to_string(a));
}

IndexCounts predicted_index_counts(const ExtremalParams& params) {
  params.validate();
  const Rational step = params.step();
  const Rational lower_gap = (1 - params.r) / step;
  const Rational upper_gap = (1 + params.r) / step;
  IndexCounts out;
  out.formula_i1 = floor(Rational(params.n - 1 - lower_gap)) - ceil(upper_gap) + 1;
  out.formula_i2 = floor(Rational(params.n - upper_gap)) - ceil(Rational(1 + lower_gap)) + 1;

  const Rational i1_lo = -params.atom(0) + 1;
  const Rational i1_hi = -params.atom(-params.n + 1) - 1;
  const Rational i2_lo = -params.atom(params.n) + 1;
  const Rational i2_hi = -params.atom(1) - 1;
  for (long i = -params.n + 1; i <= params.n; ++i) {
    const Rational x = params.atom(i);
    if (x >= i1_lo && x <= i1_hi) ++out.i1;
    if (x >= i2_lo && x <= i2_hi) ++out.i2;
  }
  out.i3 = 2 * params.n - out.i1 - out.i2;

  BigInt clamped_i1 = out.formula_i1, clamped_i2 = out.formula_i2;
  if (clamped_i1 < 0 || clamped_i2 < 0) out.clamped = true;
  if (clamped_i1 < 0) clamped_i1 = 0;
  if (clamped_i2 < 0) clamped_i2 = 0;
  if (clamped_i1 != out.i1 || clamped_i2 != out.i2) {
    std::ostringstream msg;
    msg << "index-set closed forms disagree with enumeration for n=" << params.n << " a=" << to_string(params.a)
        << " epsilon=" << to_string(params.epsilon) << " r=" << to_string(params.r) << ": |I1| formula "
        << out.formula_i1.get_str() << " vs " << out.i1 << ", |I2| formula " << out.formula_i2.get_str() << " vs "
        << out.i2;
    throw std::logic_error(msg.str());
  }
  return out;
}

long predicted_window_count(const ExtremalParams& params) {
  return predicted_limit(params.a, params.epsilon, params.r).get_si();
}

long window_count(const ExtremalParams& params, long i) {
  const Rational center = -params.atom(i);
  long count = 0;
  for (long k = -params.n + 1; k <= params.n; ++k) {
    const Rational x = params.atom(k);
    if (x >= center - 1 && x <= center + 1) ++count;
  }
  return count;
}

bool ConvergenceTable::below_limit() const {
  const Rational bound(limit);
  return std::all_of(rows.begin(), rows.end(),
                     [&](const ConvergenceRow& row) { return strict ? row.ratio < bound : row.ratio <= bound; });
}

bool ConvergenceTable::gaps_non_increasing() const {
  if (!n0) return true;
  const ConvergenceRow* previous = nullptr;
  for (const ConvergenceRow& row : rows) {
    if (row.n < *n0) continue;
    if (previous != nullptr && row.gap > previous->gap) return false;
    previous = &row;
  }
  return true;
}

ConvergenceTable convergence_table(const Rational& a, std::vector<long> n_values,
                                   std::optional<ChosenParams> override_params) {
  if (a <= 0) throw std::invalid_argument("a must be positive");
  if (n_values.empty()) throw std::invalid_argument("n list is empty");
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
  if (n_values.front() < 1) throw std::invalid_argument("every n must be >= 1");

  const ChosenParams chosen = override_params ? *override_params : choose_params(a);
  ConvergenceTable table;
  table.a = a;
  table.epsilon = chosen.epsilon;
  table.r = chosen.r;
  table.regime = chosen.regime;
  table.limit = predicted_limit(a, chosen.epsilon, chosen.r);
  table.strict = a < 2;
  table.rows.resize(n_values.size());

  const NormBall sum_window = NormBall::interval(Rational(1));
  const NormBall diff_window = NormBall::interval(a);
  const auto count = static_cast<long>(n_values.size());
  // Largest n first so the longest row is not scheduled last.
#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = count - 1; idx >= 0; --idx) {
    const auto row = static_cast<std::size_t>(idx);
    const ExtremalParams params{n_values[row], a, chosen.epsilon, chosen.r};
    const auto mu = build_extremal(params);
    const RatioResult q = ratio(mu, sum_window, diff_window, PairMode::Sum);
    table.rows[row] = ConvergenceRow{params.n, *q.value, table.limit, Rational(Rational(table.limit) - *q.value)};
  }

  const Rational floor_line = Rational(table.limit) - 1;
  for (auto it = table.rows.rbegin(); it != table.rows.rend() && it->ratio > floor_line; ++it) table.n0 = it->n;
  table.fitted_rate = 0;
  for (const ConvergenceRow& row : table.rows) table.fitted_rate = std::max(table.fitted_rate, Rational(row.gap * row.n));
  return table;
}

std::string to_csv(const ConvergenceTable& table) {
  std::ostringstream out;
  out << "n,ratio_num,ratio_den,ratio_decimal,predicted_limit,gap_decimal\n";
  for (const ConvergenceRow& row : table.rows) {
    out << row.n << ',' << row.ratio.get_num().get_str() << ',' << row.ratio.get_den().get_str() << ','
        << to_decimal(row.ratio) << ',' << row.limit.get_str() << ',' << to_decimal(row.gap) << '\n';
  }
  return out.str();
}

}  // namespace symineq
