#include <cmath>
#include <random>
#include <stdexcept>

#include "symineq/search.hpp"

namespace symineq {

std::string to_string(Law law) {
  switch (law) {
    case Law::Normal: return "normal";
    case Law::Uniform: return "uniform";
    case Law::Exponential: return "exponential";
  }
  return "?";
}

Law parse_law(std::string_view text) {
  if (text == "normal") return Law::Normal;
  if (text == "uniform") return Law::Uniform;
  if (text == "exponential" || text == "exp") return Law::Exponential;
  throw std::invalid_argument("unknown law '" + std::string(text) + "' (expected normal, uniform or exponential)");
}

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

// One stream per chunk; distribution objects keep their cached state across draws.
class Sampler {
 public:
  Sampler(Law law, std::uint64_t seed) : law_(law), rng_(seed) {}

  double operator()() {
    switch (law_) {
      case Law::Normal: return normal_(rng_);
      case Law::Uniform: return uniform_(rng_);
      case Law::Exponential: return exponential_(rng_);
    }
    return 0.0;
  }

 private:
  Law law_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{-1.0, 1.0};
  std::exponential_distribution<double> exponential_{1.0};
};

}  // namespace

MonteCarloResult monte_carlo_check(Law law, const Rational& b, const Rational& a, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("Monte Carlo needs at least 10^4 samples");
  if (b <= 0 || a <= 0) throw std::invalid_argument("b and a must be positive");

  MonteCarloResult out;
  out.law = law;
  out.samples = samples;
  out.seed = seed;
  out.bound = ceil(Rational(2 * b / a));
  const double bd = b.get_d();
  const double ad = a.get_d();

  const auto chunks = static_cast<std::int64_t>((samples + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> sum_hits(static_cast<std::size_t>(chunks)), diff_hits(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    Sampler sample(law, mix_seed(seed, static_cast<std::uint64_t>(c)));
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    std::uint64_t s = 0, d = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
      const double x = sample();
      const double y = sample();
      if (std::abs(x + y) <= bd) ++s;
      if (std::abs(x - y) <= ad) ++d;
    }
    sum_hits[static_cast<std::size_t>(c)] = s;
    diff_hits[static_cast<std::size_t>(c)] = d;
  }
  for (std::size_t c = 0; c < sum_hits.size(); ++c) {
    out.sum_hits += sum_hits[c];
    out.diff_hits += diff_hits[c];
  }

  const double n = static_cast<double>(samples);
  out.p_sum = static_cast<double>(out.sum_hits) / n;
  out.p_diff = static_cast<double>(out.diff_hits) / n;
  out.radius_sum = kZ99 * std::sqrt(out.p_sum * (1 - out.p_sum) / n);
  out.radius_diff = kZ99 * std::sqrt(out.p_diff * (1 - out.p_diff) / n);
  if (out.diff_hits == 0) {
    out.inconclusive = true;
    return out;
  }
  out.ratio = out.p_sum / out.p_diff;
  out.ratio_lower = std::max(0.0, out.p_sum - out.radius_sum) / (out.p_diff + out.radius_diff);
  const double denominator_low = out.p_diff - out.radius_diff;
  out.ratio_upper = denominator_low > 0 ? (out.p_sum + out.radius_sum) / denominator_low : INFINITY;
  out.violation = out.ratio_lower > out.bound.get_d();
  return out;
}

}  // namespace symineq
