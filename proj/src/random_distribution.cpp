#include <random>
#include <stdexcept>

#include "symineq/search.hpp"

namespace symineq {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform integer in [lo, hi] by rejection on raw mt19937_64 output, so the
// stream is identical across standard libraries.
long uniform_in(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t draw = rng();
  if (span != 0)
    while (draw >= limit) draw = rng();
  return lo + static_cast<long>(span == 0 ? draw : draw % span);
}

}  // namespace

DiscreteDistribution random_distribution(std::uint64_t seed, const RandomDistributionConfig& config) {
  if (config.max_atoms < 1) throw std::invalid_argument("max_atoms must be >= 1");
  if (config.dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (config.box < 0) throw std::invalid_argument("coordinate box must be non-negative");
  if (config.coordinate_denominator < 1 || config.weight_denominator_bound < 1)
    throw std::invalid_argument("denominator bounds must be >= 1");

  std::mt19937_64 rng(mix_seed(seed, 0));
  const long count = uniform_in(rng, 1, static_cast<long>(config.max_atoms));
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(count));
  std::vector<long> parts;
  long total = 0;
  for (long i = 0; i < count; ++i) {
    Point point(config.dimension);
    for (Rational& x : point) {
      const long q = uniform_in(rng, 1, config.coordinate_denominator);
      const long reach = floor(Rational(config.box * q)).get_si();
      x = make_rational(uniform_in(rng, -reach, reach), q);
    }
    const long part = uniform_in(rng, 1, config.weight_denominator_bound);
    parts.push_back(part);
    total += part;
    atoms.push_back({std::move(point), Rational(0)});
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i].weight = make_rational(parts[i], total);
  return DiscreteDistribution(config.dimension, std::move(atoms));
}

}  // namespace symineq
