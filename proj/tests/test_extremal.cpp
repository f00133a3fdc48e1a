#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "symineq/extremal.hpp"
#include "symineq/measure.hpp"

using namespace symineq;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Atoms written out from the definition, independent of ExtremalParams::atom.
std::vector<Rational> atoms_by_hand(long n, const Rational& a, const Rational& eps, const Rational& r) {
  std::vector<Rational> xs;
  for (long i = 1; i <= n; ++i) xs.push_back(i * (1 + eps) * a);
  for (long i = 0; i >= -n + 1; --i) xs.push_back(i * (1 + eps) * a - r);
  return xs;
}

ExtremalParams random_params(std::mt19937_64& rng, long min_n) {
  std::uniform_int_distribution<long> n_dist(min_n, 40), a_num(1, 40), a_den(1, 12), e_den(2, 400);
  ExtremalParams p{n_dist(rng), q(a_num(rng), a_den(rng)), q(1, e_den(rng)), 0};
  const Rational r_max = p.a * (1 + p.epsilon) / 2;
  std::uniform_int_distribution<long> frac(1, 64);
  p.r = r_max * q(frac(rng), 64);
  return p;
}

}  // namespace

TEST(Extremal, SmallFamilyAtUnitScale) {
  const ExtremalParams p{2, q(1), q(1, 100), q(1, 2)};
  const auto mu = build_extremal(p);
  std::vector<Rational> xs;
  for (const Atom& atom : mu.atoms()) xs.push_back(atom.point[0]);
  EXPECT_EQ(xs, (std::vector<Rational>{q(-151, 100), q(-1, 2), q(101, 100), q(202, 100)}));
  const auto r = ratio(mu, NormBall::interval(q(1)), NormBall::interval(q(1)), PairMode::Sum);
  EXPECT_EQ(*r.value, q(7, 4));
}

TEST(Extremal, ValidationRejectsBadParameters) {
  EXPECT_THROW(build_extremal({0, q(1), q(1, 100), q(1, 2)}), std::invalid_argument);
  EXPECT_THROW(build_extremal({2, q(-1), q(1, 100), q(1, 2)}), std::invalid_argument);
  EXPECT_THROW(build_extremal({2, q(1), q(0), q(1, 2)}), std::invalid_argument);
  EXPECT_THROW(build_extremal({2, q(1), q(1, 100), q(0)}), std::invalid_argument);
  EXPECT_THROW(build_extremal({2, q(1), q(1, 100), q(1)}), std::invalid_argument);
}

TEST(Extremal, ChosenParameters) {
  const auto one = choose_params(q(1));
  EXPECT_EQ(one.regime, 2);
  EXPECT_EQ(one.r, q(1, 2));
  EXPECT_EQ(predicted_limit(q(1), one.epsilon, one.r), 2);

  const auto two_thirds = choose_params(q(2, 3));
  EXPECT_EQ(two_thirds.regime, 1);
  EXPECT_EQ(two_thirds.k, 1);
  EXPECT_EQ(predicted_limit(q(2, 3), two_thirds.epsilon, two_thirds.r), 3);

  EXPECT_EQ(predicted_limit(q(3), choose_params(q(3)).epsilon, choose_params(q(3)).r), 1);
}

TEST(Extremal, ChosenLimitIsCeilTwoOverA) {
  for (long num = 1; num <= 30; ++num) {
    for (long den = 1; den <= 12; ++den) {
      const Rational a = q(num, den);
      const auto p = choose_params(a);
      EXPECT_EQ(predicted_limit(a, p.epsilon, p.r), ceil(Rational(2 / a))) << to_string(a);
      EXPECT_LE(p.epsilon, q(1, 100));
      EXPECT_NO_THROW((ExtremalParams{1, a, p.epsilon, p.r}.validate()));
    }
  }
}

TEST(Extremal, DifferenceMassIsOneOverTwoN) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const ExtremalParams p = random_params(rng, 1);
    const auto mu = build_extremal(p);
    EXPECT_EQ(oracle::diff_in(mu, Norm::LInf, p.a), q(1, 2 * p.n));
    EXPECT_EQ(prob_diff_in(mu, NormBall::interval(p.a)), q(1, 2 * p.n));
  }
}

TEST(Extremal, IndexCountsMatchEnumeration) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const ExtremalParams p = random_params(rng, 5);
    const auto xs = atoms_by_hand(p.n, p.a, p.epsilon, p.r);
    const Rational x0 = -p.r, x_first = (-p.n + 1) * p.step() - p.r, x1 = p.step(), xn = p.n * p.step();
    long i1 = 0, i2 = 0;
    for (const Rational& x : xs) {
      if (x >= -x0 + 1 && x <= -x_first - 1) ++i1;
      if (x >= -xn + 1 && x <= -x1 - 1) ++i2;
    }
    const IndexCounts counts = predicted_index_counts(p);
    EXPECT_EQ(counts.i1, i1);
    EXPECT_EQ(counts.i2, i2);
    EXPECT_EQ(counts.i3, 2 * p.n - i1 - i2);
    if (!counts.clamped) {
      EXPECT_EQ(counts.formula_i1, i1);
      EXPECT_EQ(counts.formula_i2, i2);
    }
  }
}

TEST(Extremal, IndexCountsSpecificValue) {
  const IndexCounts counts = predicted_index_counts({10, q(1), q(1, 100), q(1, 2)});
  EXPECT_EQ(counts.i1, 7);
}

TEST(Extremal, WindowCountsOnInteriorIndices) {
  const ExtremalParams p{30, q(2, 3), choose_params(q(2, 3)).epsilon, choose_params(q(2, 3)).r};
  const Rational lo1 = -p.atom(0) + 1, hi1 = -p.atom(-p.n + 1) - 1;
  const Rational lo2 = -p.atom(p.n) + 1, hi2 = -p.atom(1) - 1;
  long checked = 0;
  for (long i = -p.n + 1; i <= p.n; ++i) {
    const Rational x = p.atom(i);
    if ((x >= lo1 && x <= hi1) || (x >= lo2 && x <= hi2)) {
      EXPECT_EQ(window_count(p, i), predicted_window_count(p)) << i;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Extremal, ConvergenceTableAtUnitScale) {
  const auto table = convergence_table(q(1), {10, 2, 100});
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_EQ(table.rows[0].n, 2);
  EXPECT_EQ(table.rows[0].ratio, q(7, 4));
  EXPECT_EQ(table.limit, 2);
  EXPECT_TRUE(table.passes());
  for (const auto& row : table.rows) {
    const auto mu = build_extremal({row.n, q(1), table.epsilon, table.r});
    EXPECT_EQ(row.ratio, oracle::sum_in(mu, Norm::LInf, q(1)) / oracle::diff_in(mu, Norm::LInf, q(1)));
  }
  ASSERT_TRUE(table.n0.has_value());
  EXPECT_EQ(*table.n0, 2);
}

TEST(Extremal, CsvHeaderAndRows) {
  const auto table = convergence_table(q(1), {2});
  EXPECT_EQ(to_csv(table),
            "n,ratio_num,ratio_den,ratio_decimal,predicted_limit,gap_decimal\n"
            "2,7,4,1.75000000000000,2,0.250000000000000\n");
}

TEST(Extremal, TableRejectsBadInput) {
  EXPECT_THROW(convergence_table(q(0), {2}), std::invalid_argument);
  EXPECT_THROW(convergence_table(q(1), {}), std::invalid_argument);
  EXPECT_THROW(convergence_table(q(1), {0}), std::invalid_argument);
}
