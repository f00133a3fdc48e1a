#include "symineq/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace symineq {

namespace {

Rational rational_field(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(BigInt(value.dump()));
  throw std::invalid_argument(where + ": expected a rational string \"p/q\"");
}

std::string fixed_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

}  // namespace

DiscreteDistribution distribution_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("distribution: expected a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::size_t>() == 0)
    throw std::invalid_argument("distribution: \"dimension\" must be a positive integer");
  if (!doc.contains("atoms") || !doc["atoms"].is_array())
    throw std::invalid_argument("distribution: \"atoms\" must be an array");
  const auto d = doc["dimension"].get<std::size_t>();
  std::vector<Atom> atoms;
  std::size_t index = 0;
  for (const Json& entry : doc["atoms"]) {
    const std::string where = "atoms[" + std::to_string(index++) + "]";
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("weight") || !entry["point"].is_array())
      throw std::invalid_argument(where + ": expected {\"point\": [...], \"weight\": ...}");
    Atom atom;
    for (const Json& x : entry["point"]) atom.point.push_back(rational_field(x, where + ".point"));
    atom.weight = rational_field(entry["weight"], where + ".weight");
    atoms.push_back(std::move(atom));
  }
  return DiscreteDistribution(d, std::move(atoms));
}

DiscreteDistribution distribution_from_json_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("distribution: malformed JSON: ") + e.what());
  }
  return distribution_from_json(doc);
}

Json rational_json(const Rational& value) { return to_string(value); }

Json integer_json(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json point_json(const Point& point) {
  Json out = Json::array();
  for (const Rational& x : point) out.push_back(rational_json(x));
  return out;
}

Json to_json(const DiscreteDistribution& mu) {
  Json atoms = Json::array();
  for (const Atom& atom : mu.atoms()) atoms.push_back({{"point", point_json(atom.point)}, {"weight", rational_json(atom.weight)}});
  return {{"dimension", mu.dimension()}, {"atoms", std::move(atoms)}};
}

Json to_json(const CoveringCertificate& certificate) {
  Json centers = Json::array();
  for (const Point& c : certificate.centers) centers.push_back(point_json(c));
  return {{"bound", certificate.bound()},
          {"rho", rational_json(certificate.rho)},
          {"centers", std::move(centers)},
          {"verified", certificate.verified},
          {"verification", certificate.verification}};
}

Json to_json(const SearchResult& result) {
  Json weights = Json::array();
  for (const Rational& w : result.weights) weights.push_back(rational_json(w));
  Json support = Json::array();
  for (const Point& s : result.support) support.push_back(point_json(s));
  return {{"seed", result.seed},
          {"bound", integer_json(result.bound)},
          {"ratio", rational_json(result.exact_ratio)},
          {"ratio_decimal", to_decimal(result.exact_ratio)},
          {"weights", std::move(weights)},
          {"support", std::move(support)},
          {"converged", result.converged},
          {"iterations", result.iterations},
          {"restarts", result.restarts},
          {"best_restart", result.best_restart}};
}

Json to_json(const CheckResult& check) {
  return {{"pass", check.pass},
          {"strict", check.strict},
          {"constant", integer_json(check.constant)},
          {"lhs", rational_json(check.lhs)},
          {"rhs", rational_json(check.rhs)},
          {"slack", rational_json(check.slack)},
          {"slack_decimal", to_decimal(check.slack)}};
}

Json to_json(const WitnessReport& report) {
  Json atoms = Json::array();
  for (const Rational& x : report.witness_atoms) atoms.push_back(rational_json(x));
  return {{"pass", report.holds()},
          {"witness_mass", rational_json(report.witness_mass)},
          {"witness_mass_decimal", to_decimal(report.witness_mass)},
          {"witness_atoms", std::move(atoms)}};
}

Json to_json(const MonteCarloResult& result) {
  return {{"law", to_string(result.law)},
          {"samples", result.samples},
          {"seed", result.seed},
          {"sum_hits", result.sum_hits},
          {"diff_hits", result.diff_hits},
          {"p_sum", fixed_decimal(result.p_sum)},
          {"p_diff", fixed_decimal(result.p_diff)},
          {"confidence", "0.99"},
          {"radius_sum", fixed_decimal(result.radius_sum)},
          {"radius_diff", fixed_decimal(result.radius_diff)},
          {"ratio", fixed_decimal(result.ratio)},
          {"ratio_lower", fixed_decimal(result.ratio_lower)},
          {"ratio_upper", fixed_decimal(result.ratio_upper)},
          {"bound", integer_json(result.bound)},
          {"inconclusive", result.inconclusive},
          {"violation", result.violation},
          {"pass", result.passes()}};
}

Json to_json(const ConvergenceTable& table) {
  Json rows = Json::array();
  for (const ConvergenceRow& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"ratio", rational_json(row.ratio)},
                    {"ratio_decimal", to_decimal(row.ratio)},
                    {"predicted_limit", integer_json(row.limit)},
                    {"gap", rational_json(row.gap)},
                    {"gap_decimal", to_decimal(row.gap)}});
  }
  Json n0 = table.n0 ? Json(*table.n0) : Json(nullptr);
  return {{"a", rational_json(table.a)},
          {"epsilon", rational_json(table.epsilon)},
          {"r", rational_json(table.r)},
          {"regime", table.regime},
          {"predicted_limit", integer_json(table.limit)},
          {"strict", table.strict},
          {"n0", std::move(n0)},
          {"fitted_rate", rational_json(table.fitted_rate)},
          {"fitted_rate_decimal", to_decimal(table.fitted_rate)},
          {"rows", std::move(rows)},
          {"pass", table.passes()}};
}

}  // namespace symineq
