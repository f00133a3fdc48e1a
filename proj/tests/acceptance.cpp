// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "symineq/cli.hpp"
#include "symineq/covering.hpp"
#include "symineq/extremal.hpp"
#include "symineq/json_io.hpp"
#include "symineq/measure.hpp"
#include "symineq/search.hpp"

using namespace symineq;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Parses the CSV table written by `symineq extremal`.
std::vector<std::pair<long, Rational>> parse_table(const std::string& csv) {
  std::vector<std::pair<long, Rational>> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string n, num, den;
    std::getline(fields, n, ',');
    std::getline(fields, num, ',');
    std::getline(fields, den, ',');
    rows.emplace_back(std::stol(n), make_rational(BigInt(num), BigInt(den)));
  }
  return rows;
}

// Exact ratio of the extremal law by direct pair enumeration.
Rational reference_ratio(const ConvergenceTable& table, long n) {
  const auto mu = build_extremal({n, table.a, table.epsilon, table.r});
  return kernels::pair_mass_reference(mu, NormBall::interval(q(1)), PairMode::Sum) /
         kernels::pair_mass_reference(mu, NormBall::interval(table.a), PairMode::Diff);
}

ExtremalParams random_params(std::mt19937_64& rng, long min_n) {
  std::uniform_int_distribution<long> n_dist(min_n, 60), a_num(1, 50), a_den(1, 16), e_den(2, 1000), frac(1, 128);
  ExtremalParams p{n_dist(rng), q(a_num(rng), a_den(rng)), q(1, e_den(rng)), 0};
  p.r = p.a * (1 + p.epsilon) / 2 * q(frac(rng), 128);
  return p;
}

std::vector<std::pair<Rational, Rational>> comparison_grid() {
  // b/a ranges from 1/8 to 6, covering b <= a/2 and b > a/2.
  std::vector<std::pair<Rational, Rational>> grid;
  for (const Rational& b : {q(1, 4), q(1, 2), q(1), q(7, 4), q(3)})
    for (const Rational& a : {q(1, 2), q(2, 3), q(1), q(3, 2), q(2)}) grid.emplace_back(b, a);
  return grid;
}

const std::vector<DiscreteDistribution>& suite_laws() {
  static const std::vector<DiscreteDistribution> laws = [] {
    std::vector<DiscreteDistribution> out;
    RandomDistributionConfig config;
    config.max_atoms = 12;
    for (std::uint64_t i = 0; i < 10000; ++i) out.push_back(random_distribution(mix_seed(2024, i), config));
    return out;
  }();
  return laws;
}

// ---------------------------------------------------------------------------

Outcome sharpness_at_one() {
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run({"extremal", "--a", "1", "--n", "2,10,100,1000"}, out, err);
  const double elapsed = seconds_since(start);
  const auto rows = parse_table(out.str());
  if (code != 0 || rows.size() != 4) return {false, "extremal exited " + std::to_string(code)};

  const auto table = convergence_table(q(1), {2});
  bool ok = elapsed < 30;
  for (const auto& [n, ratio] : rows) ok = ok && ratio < 2 && ratio == reference_ratio(table, n);
  ok = ok && rows[0].second == q(7, 4) && rows[3].second >= 2 - q(10, 1000);
  char buf[160];
  std::snprintf(buf, sizeof buf, "ratio(2)=%s ratio(1000)=%s, cli time %.2fs", to_string(rows[0].second).c_str(),
                to_string(rows[3].second).c_str(), elapsed);
  return {ok, buf};
}

Outcome sharpness_at_two_thirds() {
  const auto table = convergence_table(q(2, 3), {1000});
  const Rational r = table.rows[0].ratio;
  const bool ok = table.limit == 3 && ceil(Rational(2 / q(2, 3))) == 3 && r >= 3 - q(30, 1000) && r < 3 &&
                  r == reference_ratio(table, 1000);
  return {ok, "limit=" + table.limit.get_str() + " ratio(1000)=" + to_string(r)};
}

Outcome difference_identity() {
  std::mt19937_64 rng(40);
  int good = 0;
  for (int t = 0; t < 100; ++t) {
    const ExtremalParams p = random_params(rng, 1);
    const auto mu = build_extremal(p);
    const Rational want = q(1, 2 * p.n);
    if (prob_diff_in(mu, NormBall::interval(p.a)) == want && oracle::diff_in(mu, Norm::LInf, p.a) == want) ++good;
  }
  return {good == 100, std::to_string(good) + "/100 exact"};
}

Outcome index_counts() {
  std::mt19937_64 rng(4243);
  int good = 0, clamped = 0;
  for (int t = 0; t < 100; ++t) {
    const ExtremalParams p = random_params(rng, 5);
    std::vector<Rational> xs;
    for (long i = -p.n + 1; i <= p.n; ++i) xs.push_back(i * p.step() - (i <= 0 ? p.r : Rational(0)));
    const Rational x_first = xs.front(), x0 = xs[static_cast<std::size_t>(p.n - 1)];
    const Rational x1 = xs[static_cast<std::size_t>(p.n)], xn = xs.back();
    long i1 = 0, i2 = 0;
    for (const Rational& x : xs) {
      if (x >= -x0 + 1 && x <= -x_first - 1) ++i1;
      if (x >= -xn + 1 && x <= -x1 - 1) ++i2;
    }
    try {
      const IndexCounts c = predicted_index_counts(p);
      if (c.clamped) ++clamped;
      if (c.i1 == i1 && c.i2 == i2 && (c.clamped || (c.formula_i1 == i1 && c.formula_i2 == i2))) ++good;
    } catch (const std::logic_error&) {
    }
  }
  return {good == 100, std::to_string(good) + "/100 match, " + std::to_string(clamped) + " clamped"};
}

Outcome interval_property_suite() {
  const auto start = Clock::now();
  const auto& laws = suite_laws();
  const auto grid = comparison_grid();
  const auto results = theorem2_suite(laws, grid, Execution::Parallel);
  const double elapsed = seconds_since(start);
  std::size_t good = 0, strict = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& [b, a] = grid[k % grid.size()];
    const bool want_strict = 2 * b > a;
    if (results[k].strict == want_strict && results[k].pass) ++good;
    if (results[k].strict) ++strict;
  }
  // Independent recomputation on a slice of the laws.
  bool oracle_ok = true;
  for (std::size_t i = 0; i < 300; ++i) {
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto& [b, a] = grid[g];
      const CheckResult& c = results[i * grid.size() + g];
      oracle_ok = oracle_ok && c.lhs == oracle::sum_in(laws[i], Norm::LInf, b) &&
                  c.rhs == oracle::diff_in(laws[i], Norm::LInf, a) && c.constant == oracle::ceil_by_steps(2 * b / a);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks (%zu strict), oracle slice %s, %.2fs", good, results.size(), strict,
                oracle_ok ? "ok" : "MISMATCH", elapsed);
  return {good == results.size() && oracle_ok && elapsed < 60, buf};
}

Outcome witness_property_suite() {
  const auto& laws = suite_laws();
  const std::vector<std::pair<Rational, Rational>> grid{{q(1), q(1)}, {q(2), q(1)}};
  const auto results = claim1_suite(laws, grid, Execution::Parallel);
  std::size_t good = 0;
  for (const auto& w : results)
    if (w.witness_mass > 0) ++good;
  return {good == results.size(), std::to_string(good) + "/" + std::to_string(results.size()) + " positive witness mass"};
}

Outcome product_laws() {
  RandomDistributionConfig config;
  config.max_atoms = 6;
  std::vector<DiscreteDistribution> factors;
  for (std::uint64_t i = 0; i < 1000; ++i) factors.push_back(random_distribution(mix_seed(77, i), config));
  const std::vector<std::pair<Rational, Rational>> grid{{q(1), q(1)}, {q(2), q(1)}, {q(1, 2), q(1)}, {q(5, 2), q(1)}};

  std::vector<DiscreteDistribution> laws;
  for (std::size_t k = 0; k + 1 < factors.size(); k += 2) {
    const std::vector<DiscreteDistribution> pair{factors[k], factors[k + 1]};
    laws.push_back(product(pair));
  }
  for (std::size_t k = 0; k < factors.size(); k += 3) {
    const std::vector<DiscreteDistribution> triple{factors[k], factors[(k + 1) % 1000], factors[(k + 2) % 1000]};
    laws.push_back(product(triple));
  }
  const std::size_t total = laws.size() * grid.size() * 2;
  std::vector<char> ok(total, 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(laws.size() * grid.size()); ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    const auto& [b, a] = grid[k % grid.size()];
    const auto& mu = laws[k / grid.size()];
    const auto d = static_cast<unsigned long>(mu.dimension());
    const CheckResult sum = verify_corollary2(mu, b, a, PairMode::Sum);
    const CheckResult diff = verify_corollary2(mu, b, a, PairMode::Diff);
    ok[2 * k] = sum.pass && sum.constant == pow(ceil(Rational(2 * b / a)), d);
    ok[2 * k + 1] = diff.pass && diff.constant == pow(2 * ceil(Rational(b / a)) - 1, d);
  }
  std::size_t good = 0;
  for (char c : ok) good += c != 0;
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " checks over " +
                             std::to_string(laws.size()) + " product laws (d=2,3)"};
}

Outcome covering_oracles() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(1, 80), den(1, 16), rho_num(1, 15);
  int greedy_ok = 0;
  for (int t = 0; t < 500; ++t) {
    const Rational b = q(num(rng), den(rng)), a = q(num(rng), den(rng)), rho = q(rho_num(rng), 16);
    const auto cert = greedy_cover_1d(-b, b, a, rho);
    if (static_cast<long>(cert.bound()) == oracle::ceil_by_steps(b / (rho * a)) && cert.verified) ++greedy_ok;
  }
  int lattice_ok = 0, lattice_cases = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const Rational& b : {q(1, 2), q(1), q(3, 2), q(2), q(5, 2)}) {
      for (const Rational& a : {q(1), q(2, 3)}) {
        const NormBall F(d, Norm::LInf, b), K(d, Norm::LInf, a);
        const auto cert = lattice_cover_upper_bound(F, K, q(1, 2), max_lattice_pitch(K, q(1, 2)));
        const BigInt upper = BigInt(static_cast<unsigned long>(cert.bound()));
        const BigInt exact = covering_number_linf_box(b, a, d);
        ++lattice_cases;
        if (cert.verified && upper >= exact && Rational(upper) >= volume_lower_bound(F, K, q(1, 2))) ++lattice_ok;
      }
    }
  }
  return {greedy_ok == 500 && lattice_ok == lattice_cases,
          "greedy " + std::to_string(greedy_ok) + "/500, lattice " + std::to_string(lattice_ok) + "/" +
              std::to_string(lattice_cases)};
}

Outcome adversarial_search() {
  const auto p = choose_params(q(1));
  const auto mu = build_extremal({2, q(1), p.epsilon, p.r});
  std::vector<Rational> support;
  for (const Atom& atom : mu.atoms()) support.push_back(atom.point[0]);
  int good = 0;
  Rational lowest = 2;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SearchConfig config;
    config.seed = seed;
    const SearchResult first = dinkelbach_maximize(support, q(1), q(1), config);
    const SearchResult second = dinkelbach_maximize(support, q(1), q(1), config);
    lowest = std::min(lowest, first.exact_ratio);
    if (first.exact_ratio >= q(7, 4) && first.exact_ratio < 2 && to_json(first).dump() == to_json(second).dump())
      ++good;
  }
  return {good == 10, std::to_string(good) + "/10 seeds, lowest ratio " + to_decimal(lowest)};
}

Outcome monte_carlo() {
  // Uniform on (-1, 1): {|u + v| <= 1} removes two corner triangles of area 1/2
  // each from the square of area 4, and likewise for |u - v|.
  const double exact = (4.0 - 2 * 0.5) / 4.0;
  const MonteCarloResult u = monte_carlo_check(Law::Uniform, q(1), q(1), 1000000, 1);
  const MonteCarloResult n = monte_carlo_check(Law::Normal, q(1), q(1), 1000000, 1);
  const bool uniform_ok = std::abs(u.p_sum - exact) <= u.radius_sum && std::abs(u.p_diff - exact) <= u.radius_diff;
  const bool normal_ok = !n.inconclusive && n.ratio_upper < 2;
  char buf[200];
  std::snprintf(buf, sizeof buf, "uniform p_sum=%.5f p_diff=%.5f (+/-%.5f); normal ratio in [%.4f, %.4f]", u.p_sum,
                u.p_diff, u.radius_sum, n.ratio_lower, n.ratio_upper);
  return {uniform_ok && normal_ok, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sharpness at a=1", sharpness_at_one},
      {"sharpness at a=2/3", sharpness_at_two_thirds},
      {"difference mass 1/(2n)", difference_identity},
      {"index-set closed forms", index_counts},
      {"interval comparison suite", interval_property_suite},
      {"witness suite", witness_property_suite},
      {"product laws in d=2,3", product_laws},
      {"covering oracles", covering_oracles},
      {"adversarial search", adversarial_search},
      {"monte carlo spot check", monte_carlo},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s  %2zu  %-28s %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
