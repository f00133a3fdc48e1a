#pragma once

#include <string>

#include <json.hpp>

#include "symineq/covering.hpp"
#include "symineq/distribution.hpp"
#include "symineq/extremal.hpp"
#include "symineq/search.hpp"

namespace symineq {

using Json = nlohmann::ordered_json;

/// {"dimension": d, "atoms": [{"point": ["p/q", ...], "weight": "p/q"}, ...]}
/// Rationals are "p/q" or integer strings.  Throws std::invalid_argument on any
/// schema violation, including weights that do not sum to exactly 1.
DiscreteDistribution distribution_from_json(const Json& doc);
DiscreteDistribution distribution_from_json_text(const std::string& text);
Json to_json(const DiscreteDistribution& mu);

Json rational_json(const Rational& value);
/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const BigInt& value);
Json point_json(const Point& point);

/// {"bound": N, "rho": "p/q", "centers": [[...], ...], "verified": bool, "verification": "exact"|"grid:<pitch>"}
Json to_json(const CoveringCertificate& certificate);

/// {"seed", "bound", "ratio", "ratio_decimal", "weights", "support", "converged", "iterations", "restarts"}
Json to_json(const SearchResult& result);

Json to_json(const CheckResult& check);
Json to_json(const WitnessReport& report);
Json to_json(const MonteCarloResult& result);
Json to_json(const ConvergenceTable& table);

}  // namespace symineq
