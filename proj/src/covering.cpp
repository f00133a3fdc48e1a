#include "symineq/covering.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace symineq {

namespace {

// Work limits for exact box verification and grid verification, counted in
// point-versus-center membership tests.
constexpr double kExactBudget = 2e7;
constexpr double kGridBudget = 2e7;
// Pruning re-verifies once per center, so it is skipped for large lattices.
constexpr std::size_t kMaxPrunedCenters = 128;
constexpr std::size_t kMaxLatticeDimension = 4;

void require_positive(const Rational& v, const char* name) {
  if (v <= 0) throw std::invalid_argument(std::string(name) + " must be positive, got " + to_string(v));
}

const NormBall* outer_ball(const CoverTarget& target) {
  if (const auto* ball = std::get_if<NormBall>(&target)) return ball;
  if (const auto* diff = std::get_if<BallDifference>(&target)) return &diff->outer;
  return nullptr;
}

IntervalSet normalized(IntervalSet set) {
  std::erase_if(set, [](const Interval1d& iv) { return iv.empty(); });
  std::sort(set.begin(), set.end(), [](const Interval1d& x, const Interval1d& y) { return x.lo < y.lo; });
  return set;
}

// 1-d view of a target.  In one dimension every norm ball is [-R, R].
IntervalSet as_intervals(const CoverTarget& target) {
  if (const auto* set = std::get_if<IntervalSet>(&target)) return normalized(*set);
  if (const auto* ball = std::get_if<NormBall>(&target)) return {Interval1d{-ball->radius(), ball->radius()}};
  const auto& diff = std::get<BallDifference>(target);
  const Rational& R = diff.outer.radius();
  const Rational& r = diff.inner.radius();
  if (r >= R) return {};
  return {Interval1d{-R, -r, false, true}, Interval1d{r, R, true, false}};
}

// Union of closed intervals [c - s, c + s], merged into disjoint components.
std::vector<std::pair<Rational, Rational>> merged_cover(const std::vector<Point>& centers, const Rational& s) {
  std::vector<std::pair<Rational, Rational>> pieces;
  pieces.reserve(centers.size());
  for (const Point& c : centers) pieces.emplace_back(c[0] - s, c[0] + s);
  std::sort(pieces.begin(), pieces.end());
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& piece : pieces) {
    if (!merged.empty() && piece.first <= merged.back().second) {
      if (piece.second > merged.back().second) merged.back().second = piece.second;
    } else {
      merged.push_back(std::move(piece));
    }
  }
  return merged;
}

bool covers_1d(const IntervalSet& target, const std::vector<Point>& centers, const Rational& s) {
  const auto merged = merged_cover(centers, s);
  for (const Interval1d& iv : target) {
    bool inside = false;
    for (const auto& [left, right] : merged) {
      if (left <= iv.lo && right >= iv.hi) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool in_translate(std::span<const Rational> p, const Point& center, const NormBall& scaled_K, Point& scratch) {
  for (std::size_t k = 0; k < p.size(); ++k) scratch[k] = p[k] - center[k];
  return scaled_K.contains(scratch);
}

// Exact check for l_inf K against an l_inf box (or box minus box).  Splits each
// axis at every box boundary; each open piece and each boundary point is
// uniformly in or out of every box, so checking one representative per
// elementary cell decides containment.
std::optional<bool> covers_boxes(const CoverTarget& target, const std::vector<Point>& centers, const NormBall& K,
                                 const Rational& rho) {
  const NormBall* outer = outer_ball(target);
  if (outer == nullptr || outer->norm() != Norm::LInf || K.norm() != Norm::LInf) return std::nullopt;
  const auto* diff = std::get_if<BallDifference>(&target);
  if (diff != nullptr && diff->inner.norm() != Norm::LInf) return std::nullopt;

  const std::size_t d = outer->dimension();
  const Rational s = rho * K.radius();
  const Rational& R = outer->radius();
  std::vector<std::vector<Rational>> reps(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<Rational> cuts = {-R, R};
    if (diff != nullptr && diff->inner.radius() < R) {
      cuts.push_back(-diff->inner.radius());
      cuts.push_back(diff->inner.radius());
    }
    for (const Point& c : centers) {
      for (Rational v : {Rational(c[axis] - s), Rational(c[axis] + s)})
        if (v >= -R && v <= R) cuts.push_back(std::move(v));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      reps[axis].push_back(cuts[i]);
      if (i + 1 < cuts.size()) reps[axis].push_back((cuts[i] + cuts[i + 1]) / 2);
    }
  }
  double cells = 1;
  for (const auto& r : reps) cells *= static_cast<double>(r.size());
  if (cells * static_cast<double>(std::max<std::size_t>(centers.size(), 1)) > kExactBudget) return std::nullopt;

  const NormBall scaled_K = K.with_radius(s);
  std::vector<std::size_t> index(d, 0);
  Point p(d), scratch(d);
  while (true) {
    for (std::size_t k = 0; k < d; ++k) p[k] = reps[k][index[k]];
    if (target_contains(target, p)) {
      bool hit = false;
      for (const Point& c : centers) {
        if (in_translate(p, c, scaled_K, scratch)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    std::size_t axis = 0;
    while (axis < d && ++index[axis] == reps[axis].size()) index[axis++] = 0;
    if (axis == d) break;
  }
  return true;
}

std::optional<bool> covers_exactly(const CoverTarget& target, const std::vector<Point>& centers, const NormBall& K,
                                   const Rational& rho) {
  if (target_dimension(target) == 1) return covers_1d(as_intervals(target), centers, rho * K.radius());
  return covers_boxes(target, centers, K, rho);
}

Rational bounding_radius(const CoverTarget& target) {
  if (const NormBall* ball = outer_ball(target)) return ball->radius();
  Rational r = 0;
  for (const Interval1d& iv : std::get<IntervalSet>(target)) r = std::max(r, Rational(std::max(abs(iv.lo), abs(iv.hi))));
  return r;
}

// Grid check: every grid point of the target lies in some translate.  The
// pitch doubles until the work fits the budget; the pitch used is returned.
std::pair<bool, Rational> covers_on_grid(const CoverTarget& target, const std::vector<Point>& centers,
                                         const NormBall& K, const Rational& rho, Rational pitch) {
  const std::size_t d = target_dimension(target);
  const Rational R = bounding_radius(target);
  BigInt steps;
  while (true) {
    steps = ceil(R / pitch);
    double points = 1;
    for (std::size_t k = 0; k < d; ++k) points *= 2 * steps.get_d() + 1;
    if (points * static_cast<double>(std::max<std::size_t>(centers.size(), 1)) <= kGridBudget) break;
    pitch *= 2;
  }
  const long n = steps.get_si();
  const NormBall scaled_K = K.with_radius(rho * K.radius());
  std::vector<long> index(d, -n);
  Point p(d), scratch(d);
  bool ok = true;
  while (ok) {
    for (std::size_t k = 0; k < d; ++k) p[k] = pitch * index[k];
    if (target_contains(target, p)) {
      ok = std::any_of(centers.begin(), centers.end(), [&](const Point& c) { return in_translate(p, c, scaled_K, scratch); });
    }
    std::size_t axis = 0;
    while (axis < d && ++index[axis] > n) index[axis++] = -n;
    if (axis == d) break;
  }
  return {ok, pitch};
}

// Closest point of the box prod [lo_k, hi_k] to the origin.
Point closest_to_origin(std::span<const Rational> lo, std::span<const Rational> hi) {
  Point z(lo.size());
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > 0)
      z[k] = lo[k];
    else if (hi[k] < 0)
      z[k] = hi[k];
    else
      z[k] = 0;
  }
  return z;
}

bool box_inside_ball(std::span<const Rational> lo, std::span<const Rational> hi, const NormBall& ball) {
  const std::size_t d = lo.size();
  Point corner(d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    for (std::size_t k = 0; k < d; ++k) corner[k] = (mask >> k) & 1 ? hi[k] : lo[k];
    if (!ball.contains(corner)) return false;
  }
  return true;
}

// Conservative: true whenever the closed box might meet the target.
bool cell_meets_target(const CoverTarget& target, std::span<const Rational> lo, std::span<const Rational> hi) {
  if (const auto* set = std::get_if<IntervalSet>(&target)) {
    for (const Interval1d& iv : *set) {
      if (iv.empty()) continue;
      const bool left_ok = iv.hi_open ? lo[0] < iv.hi : lo[0] <= iv.hi;
      const bool right_ok = iv.lo_open ? hi[0] > iv.lo : hi[0] >= iv.lo;
      if (left_ok && right_ok) return true;
    }
    return false;
  }
  const NormBall* outer = outer_ball(target);
  if (!outer->contains(closest_to_origin(lo, hi))) return false;
  if (const auto* diff = std::get_if<BallDifference>(&target)) return !box_inside_ball(lo, hi, diff->inner);
  return true;
}

Rational pi_lower() { return make_rational(314159265358979L, 100000000000000L); }
Rational pi_upper() { return make_rational(314159265358980L, 100000000000000L); }

// Volume of the unit l_p ball in R^d; for l2 the enclosure endpoint selected by `upper`.
Rational unit_ball_volume(Norm norm, std::size_t d, bool upper) {
  const Rational two_d = Rational(pow(BigInt(2), d));
  switch (norm) {
    case Norm::LInf: return two_d;
    case Norm::L1: {
      BigInt fact = 1;
      for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<unsigned long>(k);
      return two_d / Rational(fact);
    }
    case Norm::L2: {
      const Rational pi = upper ? pi_upper() : pi_lower();
      const std::size_t k = d / 2;
      Rational pi_k = 1;
      for (std::size_t i = 0; i < k; ++i) pi_k *= pi;
      if (d % 2 == 0) {
        BigInt fact = 1;
        for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
        return pi_k / Rational(fact);
      }
      BigInt double_fact = 1;
      for (std::size_t i = 3; i <= d; i += 2) double_fact *= static_cast<unsigned long>(i);
      return Rational(pow(BigInt(2), k + 1)) * pi_k / Rational(double_fact);
    }
  }
  return 0;
}

}  // namespace

std::size_t target_dimension(const CoverTarget& target) {
  if (const NormBall* ball = outer_ball(target)) return ball->dimension();
  return 1;
}

bool target_contains(const CoverTarget& target, std::span<const Rational> x) {
  if (const auto* ball = std::get_if<NormBall>(&target)) return ball->contains(x);
  if (const auto* diff = std::get_if<BallDifference>(&target)) return diff->contains(x);
  if (x.size() != 1) throw std::invalid_argument("interval targets are one-dimensional");
  const auto& set = std::get<IntervalSet>(target);
  return std::any_of(set.begin(), set.end(), [&](const Interval1d& iv) { return iv.contains(x[0]); });
}

PitchTooLarge::PitchTooLarge(const Rational& requested, Rational max_pitch)
    : std::invalid_argument("lattice pitch " + to_string(requested) + " exceeds the maximal admissible pitch " +
                            to_string(max_pitch)),
      max_pitch_(std::move(max_pitch)) {}

BigInt covering_number_interval(const Rational& b, const Rational& a, const Rational& rho) {
  require_positive(b, "b");
  require_positive(a, "a");
  require_positive(rho, "rho");
  return ceil(b / (rho * a));
}

BigInt covering_number_linf_box(const Rational& b, const Rational& a, std::size_t d) {
  require_positive(b, "b");
  require_positive(a, "a");
  if (d == 0) throw std::invalid_argument("dimension must be positive");
  return pow(ceil(Rational(2 * b / a)), static_cast<unsigned long>(d));
}

BigInt annulus_constant_1d(const Rational& b, const Rational& a) {
  require_positive(b, "b");
  require_positive(a, "a");
  const BigInt closed_form = 2 * ceil(b / a) - 1;
  const auto annulus = as_intervals(BallDifference(NormBall::interval(b), NormBall::interval(a)));
  const auto cover = greedy_cover_intervals(annulus, a, Rational(1, 2));
  if (BigInt(static_cast<unsigned long>(cover.bound()) + 1) != closed_form)
    throw std::logic_error("annulus constant " + closed_form.get_str() + " disagrees with greedy cover size " +
                           std::to_string(cover.bound()) + " + 1");
  return closed_form;
}

CoveringCertificate greedy_cover_intervals(IntervalSet target, const Rational& half_width, const Rational& rho) {
  require_positive(half_width, "K half-width");
  require_positive(rho, "rho");
  target = normalized(std::move(target));
  const Rational length = 2 * rho * half_width;
  const Rational half = length / 2;

  std::vector<Point> centers;
  std::optional<Rational> reach;  // every target point <= reach is covered
  for (const Interval1d& iv : target) {
    Rational start = iv.lo;
    if (reach) {
      if (*reach >= iv.hi) continue;
      if (*reach >= iv.lo) start = *reach;
    }
    while (true) {
      centers.push_back({start + half});
      reach = start + length;
      if (*reach >= iv.hi) break;
      start = *reach;
    }
  }
  CoveringCertificate cert{std::move(centers), CoverTarget(std::move(target)), NormBall::interval(half_width), rho, false, {}};
  verify_certificate(cert);
  return cert;
}

CoveringCertificate greedy_cover_1d(const Rational& lo, const Rational& hi, const Rational& half_width,
                                    const Rational& rho) {
  IntervalSet target;
  if (lo <= hi) target.push_back(Interval1d{lo, hi});
  return greedy_cover_intervals(std::move(target), half_width, rho);
}

Rational max_lattice_pitch(const NormBall& K, const Rational& rho) {
  require_positive(rho, "rho");
  const Rational s = rho * K.radius();
  const auto d = static_cast<unsigned long>(K.dimension());
  switch (K.norm()) {
    case Norm::LInf: return s;
    case Norm::L1: return s / Rational(d);
    case Norm::L2: {
      // 1/sqrt(d) >= isqrt(4^40 / d) / 2^40.
      const BigInt scale = BigInt(1) << 40;
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), BigInt(scale * scale / d).get_mpz_t());
      return s * make_rational(root, scale);
    }
  }
  return 0;
}

CoveringCertificate lattice_cover_upper_bound(const CoverTarget& target, const NormBall& K, const Rational& rho,
                                              const Rational& pitch) {
  const std::size_t d = target_dimension(target);
  if (d != K.dimension()) throw std::invalid_argument("target and K dimensions differ");
  if (d > kMaxLatticeDimension) throw std::invalid_argument("lattice covers support dimension <= 4");
  require_positive(rho, "rho");
  require_positive(pitch, "pitch");
  require_positive(K.radius(), "K radius");
  const Rational max_pitch = max_lattice_pitch(K, rho);
  if (pitch > max_pitch) throw PitchTooLarge(pitch, max_pitch);

  const long n = ceil(bounding_radius(target) / pitch).get_si();
  const Rational half = pitch / 2;
  const long width = 2 * n + 1;
  long tail = 1;
  for (std::size_t k = 1; k < d; ++k) tail *= width;

  // One slab per first-axis index; slabs are concatenated in index order so
  // the center list comes out lexicographically sorted.
  std::vector<std::vector<Point>> slabs(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic)
  for (long i0 = 0; i0 < width; ++i0) {
    Point c(d), lo(d), hi(d);
    for (long rest = 0; rest < tail; ++rest) {
      long code = rest;
      c[0] = pitch * (i0 - n);
      for (std::size_t k = 1; k < d; ++k) {
        c[k] = pitch * (code % width - n);
        code /= width;
      }
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = c[k] - half;
        hi[k] = c[k] + half;
      }
      if (cell_meets_target(target, lo, hi)) slabs[static_cast<std::size_t>(i0)].push_back(c);
    }
    std::sort(slabs[static_cast<std::size_t>(i0)].begin(), slabs[static_cast<std::size_t>(i0)].end());
  }
  std::vector<Point> centers;
  for (auto& slab : slabs)
    for (Point& c : slab) centers.push_back(std::move(c));

  // Drop centers whose translates are redundant, while exact verification is cheap.
  const bool prune = centers.size() <= kMaxPrunedCenters;
  if (auto ok = prune ? covers_exactly(target, centers, K, rho) : std::nullopt; ok && *ok) {
    for (std::size_t i = 0; i < centers.size() && centers.size() > 1;) {
      std::vector<Point> trial = centers;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      auto still = covers_exactly(target, trial, K, rho);
      if (!still) break;
      if (*still)
        centers = std::move(trial);
      else
        ++i;
    }
  }

  CoveringCertificate cert{std::move(centers), target, K, rho, false, {}};
  verify_certificate(cert);
  return cert;
}

void verify_certificate(CoveringCertificate& cert) {
  if (auto exact = covers_exactly(cert.target, cert.centers, cert.K, cert.rho)) {
    cert.verified = *exact;
    cert.verification = "exact";
    return;
  }
  const Rational start = max_lattice_pitch(cert.K, cert.rho) / 2;
  auto [ok, pitch] = covers_on_grid(cert.target, cert.centers, cert.K, cert.rho, start);
  cert.verified = ok;
  cert.verification = "grid:" + to_string(pitch);
}

Rational volume_lower_bound(const NormBall& F, const NormBall& K, const Rational& rho) {
  if (F.dimension() != K.dimension()) throw std::invalid_argument("F and K dimensions differ");
  require_positive(rho, "rho");
  require_positive(K.radius(), "K radius");
  const std::size_t d = F.dimension();
  Rational scale = F.radius() / (rho * K.radius());
  Rational ratio = 1;
  for (std::size_t k = 0; k < d; ++k) ratio *= scale;
  if (F.norm() == K.norm()) return ratio;
  return ratio * unit_ball_volume(F.norm(), d, false) / unit_ball_volume(K.norm(), d, true);
}

namespace {

CoveringConstant compute_comparison_constant(const NormBall& F, const NormBall& K, PairMode mode) {
  if (F.dimension() != K.dimension()) throw std::invalid_argument("F and K dimensions differ");
  require_positive(K.radius(), "K radius");
  const Rational rho = K.rho();
  const std::size_t d = F.dimension();
  if (mode == PairMode::Sum) {
    if (F.radius() == 0) return {BigInt(1), true, "point"};
    if (d == 1) return {covering_number_interval(F.radius(), K.radius(), rho), true, "interval"};
    if (F.norm() == Norm::LInf && K.norm() == Norm::LInf)
      return {covering_number_linf_box(F.radius(), K.radius(), d), true, "linf-box"};
    const auto cert = lattice_cover_upper_bound(F, K, rho, max_lattice_pitch(K, rho));
    if (!cert.verified) throw std::logic_error("lattice certificate failed verification");
    return {BigInt(static_cast<unsigned long>(cert.bound())), false, "lattice"};
  }
  if (F.radius() <= K.radius() && F.norm() == K.norm()) return {BigInt(1), true, "empty-difference"};
  if (d == 1) return {annulus_constant_1d(F.radius(), K.radius()), true, "annulus"};
  const auto cert = lattice_cover_upper_bound(BallDifference(F, K), K, rho, max_lattice_pitch(K, rho));
  if (!cert.verified) throw std::logic_error("lattice certificate failed verification");
  return {BigInt(static_cast<unsigned long>(cert.bound()) + 1), false, "lattice"};
}

}  // namespace

CoveringConstant comparison_constant(const NormBall& F, const NormBall& K, PairMode mode) {
  // Memoized; lattice certificates are costly.
  using Key = std::tuple<std::size_t, Norm, Rational, std::size_t, Norm, Rational, PairMode>;
  static std::mutex mutex;
  static std::map<Key, CoveringConstant> cache;
  const Key key{F.dimension(), F.norm(), F.radius(), K.dimension(), K.norm(), K.radius(), mode};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CoveringConstant value = compute_comparison_constant(F, K, mode);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace symineq
