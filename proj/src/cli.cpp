#include "symineq/cli.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "symineq/covering.hpp"
#include "symineq/extremal.hpp"
#include "symineq/json_io.hpp"
#include "symineq/measure.hpp"
#include "symineq/search.hpp"

namespace symineq::cli {

namespace {

struct Common {
  std::string format;
  std::string out_path;
};

void add_common(CLI::App& cmd, Common& common, const std::string& default_format) {
  common.format = default_format;
  cmd.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd.add_option("--out", common.out_path, "Write the report to this file instead of stdout");
}

struct VerifyOptions {
  Common common;
  std::string dist_path;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::string b = "1";
  std::string a = "1";
  std::size_t max_atoms = 12;
  std::size_t dimension = 1;
  std::string norm_f = "inf";
  std::string norm_k = "inf";
};

struct ExtremalOptions {
  Common common;
  std::string a;
  std::string n_list = "2,10,100,1000";
  std::string epsilon;
  std::string r;
};

struct CoverOptions {
  Common common;
  std::string b;
  std::string a;
  std::size_t d = 1;
  std::string norm_f = "inf";
  std::string norm_k = "inf";
  std::string rho = "1/2";
  std::string pitch;
};

struct SearchOptions {
  Common common;
  std::string support_from;
  std::string support;
  std::string a = "1";
  std::string b = "1";
  long n = 2;
  std::string epsilon;
  std::string r;
  SearchConfig search;
};

struct McOptions {
  Common common;
  std::string law = "normal";
  std::string b = "1";
  std::string a = "1";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    parts.push_back(item);
  }
  if (parts.empty()) throw std::invalid_argument("empty list");
  return parts;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw std::invalid_argument("expected an integer, got '" + text + "'");
  return value;
}

Rational positive(const std::string& name, const std::string& text) {
  Rational value = parse_rational(text);
  if (value <= 0) throw std::invalid_argument("--" + name + " must be positive");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const Common& common, const std::string& report, std::ostream& out) {
  if (common.out_path.empty()) {
    out << report;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + common.out_path + "'");
  file << report;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// key,value rows for the single-record reports
std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string text = "key,value\n";
  for (const auto& [key, value] : rows) text += key + "," + value + "\n";
  return text;
}

std::string json_scalar(const Json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

// Runs body(i) for i in [0, count) in parallel and rethrows the first failure
// by index after the loop.
template <class Body>
void parallel_cases(std::size_t count, Body body) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------

struct NamedCheck {
  std::string name;
  Json report;
  bool pass;
};

std::vector<NamedCheck> run_checks(const DiscreteDistribution& mu, const Rational& b, const Rational& a, Norm norm_f,
                                   Norm norm_k) {
  std::vector<NamedCheck> checks;
  const std::size_t d = mu.dimension();
  const NormBall F(d, norm_f, b);
  const NormBall K(d, norm_k, a);
  auto add = [&](std::string name, const CheckResult& c) {
    Json report = to_json(c);
    report["equality"] = c.slack == 0;
    checks.push_back({std::move(name), std::move(report), c.pass});
  };
  if (d == 1) {
    add("interval", verify_theorem2(mu, b, a));
    add("interval_diff", verify_corollary2(mu, b, a, PairMode::Diff));
    if (2 * b > a) {
      const WitnessReport w = claim1_witness(mu, b, a);
      checks.push_back({"witness", to_json(w), w.holds()});
    }
  }
  add("ball_sum", verify_theorem1(mu, F, K, PairMode::Sum));
  add("ball_diff", verify_theorem1(mu, F, K, PairMode::Diff));
  return checks;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Rational b = positive("b", opt.b);
  const Rational a = positive("a", opt.a);
  const Norm norm_f = parse_norm(opt.norm_f);
  const Norm norm_k = parse_norm(opt.norm_k);
  if (opt.dist_path.empty() == (opt.random == 0))
    throw std::invalid_argument("verify needs exactly one of --dist FILE or --random N");
  if (opt.max_atoms < 1) throw std::invalid_argument("--max-atoms must be at least 1");
  if (opt.dimension < 1) throw std::invalid_argument("--dimension must be at least 1");

  std::vector<DiscreteDistribution> laws;
  std::vector<std::uint64_t> seeds;
  if (!opt.dist_path.empty()) {
    laws.push_back(distribution_from_json_text(read_file(opt.dist_path)));
  } else {
    RandomDistributionConfig rc;
    rc.dimension = opt.dimension;
    rc.max_atoms = opt.max_atoms;
    for (std::size_t i = 0; i < opt.random; ++i) {
      seeds.push_back(mix_seed(opt.seed, i));
      laws.push_back(random_distribution(seeds.back(), rc));
    }
  }

  std::vector<std::vector<NamedCheck>> results(laws.size());
  parallel_cases(laws.size(), [&](std::size_t i) { results[i] = run_checks(laws[i], b, a, norm_f, norm_k); });

  std::size_t failures = 0;
  for (const auto& checks : results)
    for (const auto& c : checks)
      if (!c.pass) ++failures;
  const bool pass = failures == 0;

  if (opt.common.format == "csv") {
    std::string text = "case,seed,check,pass,strict,equality,constant,lhs,rhs,slack,slack_decimal\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const std::string seed = seeds.empty() ? "" : std::to_string(seeds[i]);
      for (const auto& c : results[i]) {
        text += std::to_string(i) + "," + seed + "," + c.name + "," + (c.pass ? "true" : "false");
        if (c.name == "witness") {
          text += ",,,,," + json_scalar(c.report["witness_mass"]) + ",,\n";
          continue;
        }
        const Json& r = c.report;
        text += std::string(",") + (r["strict"].get<bool>() ? "true" : "false") + "," +
                (r["equality"].get<bool>() ? "true" : "false") + "," + json_scalar(r["constant"]) + "," +
                json_scalar(r["lhs"]) + "," + json_scalar(r["rhs"]) + "," + json_scalar(r["slack"]) + "," +
                json_scalar(r["slack_decimal"]) + "\n";
      }
    }
    emit(opt.common, text, out);
  } else {
    Json cases = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      Json entry;
      entry["case"] = i;
      if (!seeds.empty()) entry["seed"] = seeds[i];
      entry["distribution"] = to_json(laws[i]);
      Json checks = Json::object();
      bool case_pass = true;
      for (auto& c : results[i]) {
        checks[c.name] = std::move(c.report);
        case_pass = case_pass && c.pass;
      }
      entry["checks"] = std::move(checks);
      entry["pass"] = case_pass;
      cases.push_back(std::move(entry));
    }
    Json config = {{"b", to_string(b)},
                   {"a", to_string(a)},
                   {"norm_f", to_string(norm_f)},
                   {"norm_k", to_string(norm_k)}};
    if (!opt.dist_path.empty()) {
      config["dist"] = opt.dist_path;
    } else {
      config["random"] = opt.random;
      config["seed"] = opt.seed;
      config["max_atoms"] = opt.max_atoms;
      config["dimension"] = opt.dimension;
    }
    Json doc = {{"command", "verify"},
                {"config", std::move(config)},
                {"cases", std::move(cases)},
                {"summary", {{"cases", laws.size()}, {"failed_checks", failures}, {"pass", pass}}}};
    emit(opt.common, dump(doc), out);
  }
  return pass ? kPass : kPropertyFailure;
}

// ---------------------------------------------------------------------------

std::optional<ChosenParams> override_params(const Rational& a, const std::string& epsilon, const std::string& r) {
  if (epsilon.empty() && r.empty()) return std::nullopt;
  ChosenParams p;
  const Rational inv = 1 / a;
  p.k = ceil(inv) - 1;
  p.regime = inv <= Rational(p.k) + make_rational(1, 2) ? 1 : 2;
  // A missing value defaults to epsilon = 1/100 or r = a/2.
  p.epsilon = epsilon.empty() ? make_rational(1, 100) : positive("epsilon", epsilon);
  p.r = r.empty() ? Rational(a / 2) : positive("r", r);
  ExtremalParams{1, a, p.epsilon, p.r}.validate();
  return p;
}

std::vector<long> parse_n_list(const std::string& text) {
  std::vector<long> values;
  for (const std::string& item : split(text, ',')) {
    const long n = parse_long(item);
    if (n < 1) throw std::invalid_argument("every n must be >= 1");
    values.push_back(n);
  }
  return values;
}

int cmd_extremal(const ExtremalOptions& opt, std::ostream& out, std::ostream& err) {
  const Rational a = positive("a", opt.a);
  const std::vector<long> n_values = parse_n_list(opt.n_list);
  const auto chosen = override_params(a, opt.epsilon, opt.r);
  const ConvergenceTable table = convergence_table(a, n_values, chosen);

  if (opt.common.format == "csv") {
    err << "# a=" << to_string(table.a) << " epsilon=" << to_string(table.epsilon) << " r=" << to_string(table.r)
        << " regime=" << table.regime << " predicted_limit=" << table.limit.get_str()
        << " n0=" << (table.n0 ? std::to_string(*table.n0) : "none")
        << " fitted_rate=" << to_string(table.fitted_rate) << " pass=" << (table.passes() ? "true" : "false") << "\n";
    emit(opt.common, to_csv(table), out);
  } else {
    Json config = {{"a", to_string(a)},
                   {"n", n_values},
                   {"epsilon", to_string(table.epsilon)},
                   {"r", to_string(table.r)},
                   {"params", chosen ? "override" : "chosen"}};
    Json doc = {{"command", "extremal"}, {"config", std::move(config)}, {"table", to_json(table)}};
    emit(opt.common, dump(doc), out);
  }
  return table.passes() ? kPass : kPropertyFailure;
}

// ---------------------------------------------------------------------------

int cmd_cover(const CoverOptions& opt, std::ostream& out) {
  const Rational b = positive("b", opt.b);
  const Rational a = positive("a", opt.a);
  const Rational rho = positive("rho", opt.rho);
  if (opt.d < 1) throw std::invalid_argument("--d must be at least 1");
  const NormBall F(opt.d, parse_norm(opt.norm_f), b);
  const NormBall K(opt.d, parse_norm(opt.norm_k), a);
  if (opt.d > 4) throw std::invalid_argument("covering certificates are built for d <= 4");

  std::optional<BigInt> exact;
  std::string exact_source;
  if (opt.d == 1) {
    exact = covering_number_interval(b, a, rho);
    exact_source = "interval";
  } else if (F.norm() == Norm::LInf && K.norm() == Norm::LInf && rho == make_rational(1, 2)) {
    exact = covering_number_linf_box(b, a, opt.d);
    exact_source = "linf-box";
  }

  CoveringCertificate certificate = [&] {
    if (opt.d == 1 && opt.pitch.empty()) return greedy_cover_1d(-b, b, a, rho);
    const Rational pitch = opt.pitch.empty() ? max_lattice_pitch(K, rho) : positive("pitch", opt.pitch);
    return lattice_cover_upper_bound(F, K, rho, pitch);
  }();
  const Rational volume = volume_lower_bound(F, K, rho);

  if (certificate.centers.empty() || !certificate.verified)
    throw std::logic_error("covering certificate failed verification");
  const BigInt upper = BigInt(static_cast<unsigned long>(certificate.bound()));
  const bool consistent = upper >= ceil(volume) && (!exact || (*exact <= upper && *exact >= ceil(volume)));

  Json config = {{"b", to_string(b)},          {"a", to_string(a)},        {"d", opt.d},
                 {"norm_f", to_string(F.norm())}, {"norm_k", to_string(K.norm())}, {"rho", to_string(rho)}};
  if (!opt.pitch.empty()) config["pitch"] = opt.pitch;

  Json doc = {{"command", "cover"}, {"config", std::move(config)}};
  doc["covering_number"] = exact ? integer_json(*exact) : Json(nullptr);
  doc["covering_number_source"] = exact ? Json(exact_source) : Json(nullptr);
  doc["upper_bound"] = certificate.bound();
  doc["volume_lower_bound"] = rational_json(volume);
  doc["volume_lower_bound_decimal"] = to_decimal(volume);
  if (rho == make_rational(1, 2)) {
    const CoveringConstant sum = comparison_constant(F, K, PairMode::Sum);
    const CoveringConstant diff = comparison_constant(F, K, PairMode::Diff);
    doc["sum_constant"] = {{"value", integer_json(sum.value)}, {"exact", sum.exact}, {"source", sum.source}};
    doc["diff_constant"] = {{"value", integer_json(diff.value)}, {"exact", diff.exact}, {"source", diff.source}};
  }
  if (opt.d == 1) doc["annulus_constant"] = integer_json(annulus_constant_1d(b, a));
  doc["certificate"] = to_json(certificate);
  doc["pass"] = consistent;

  if (opt.common.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, value] : doc.items()) {
      if (key == "config" || key == "certificate" || key == "command") continue;
      if (value.is_object()) {
        for (const auto& [sub, v] : value.items()) rows.emplace_back(key + "." + sub, json_scalar(v));
      } else {
        rows.emplace_back(key, json_scalar(value));
      }
    }
    emit(opt.common, key_value_csv(rows), out);
  } else {
    emit(opt.common, dump(doc), out);
  }
  return consistent ? kPass : kPropertyFailure;
}

// ---------------------------------------------------------------------------

int cmd_search(const SearchOptions& opt, std::ostream& out) {
  const Rational b = positive("b", opt.b);
  const Rational a = positive("a", opt.a);
  if (opt.support_from.empty() == opt.support.empty())
    throw std::invalid_argument("search needs exactly one of --support-from extremal or --support LIST");

  std::vector<Rational> support;
  Json source;
  if (!opt.support_from.empty()) {
    if (opt.support_from != "extremal") throw std::invalid_argument("--support-from accepts only 'extremal'");
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    const auto chosen = override_params(a, opt.epsilon, opt.r);
    const ChosenParams p = chosen ? *chosen : choose_params(a);
    const DiscreteDistribution mu = build_extremal({opt.n, a, p.epsilon, p.r});
    for (const Atom& atom : mu.atoms()) support.push_back(atom.point[0]);
    source = {{"from", "extremal"}, {"n", opt.n}, {"epsilon", to_string(p.epsilon)}, {"r", to_string(p.r)}};
  } else {
    Json listed = Json::array();
    for (const std::string& item : split(opt.support, ',')) {
      support.push_back(parse_rational(item));
      listed.push_back(to_string(support.back()));
    }
    source = {{"from", "list"}, {"points", std::move(listed)}};
  }

  const SearchResult result = dinkelbach_maximize(support, b, a, opt.search);
  const bool pass = result.exact_ratio < Rational(result.bound);

  Json config = {{"b", to_string(b)},
                 {"a", to_string(a)},
                 {"support", std::move(source)},
                 {"seed", opt.search.seed},
                 {"restarts", opt.search.restarts},
                 {"max_iters", opt.search.max_iters},
                 {"inner_iters", opt.search.inner_iters},
                 {"tol", opt.search.tol}};
  if (opt.common.format == "csv") {
    std::string text = "index,support,weight,weight_decimal\n";
    for (std::size_t i = 0; i < result.weights.size(); ++i)
      text += std::to_string(i) + "," + to_string(result.support[i][0]) + "," + to_string(result.weights[i]) + "," +
              to_decimal(result.weights[i]) + "\n";
    text += "# ratio=" + to_string(result.exact_ratio) + " ratio_decimal=" + to_decimal(result.exact_ratio) +
            " bound=" + result.bound.get_str() + " seed=" + std::to_string(result.seed) + "\n";
    emit(opt.common, text, out);
  } else {
    Json doc = {{"command", "search"}, {"config", std::move(config)}, {"result", to_json(result)}, {"pass", pass}};
    emit(opt.common, dump(doc), out);
  }
  return pass ? kPass : kPropertyFailure;
}

// ---------------------------------------------------------------------------

int cmd_mc(const McOptions& opt, std::ostream& out) {
  const Law law = parse_law(opt.law);
  const Rational b = positive("b", opt.b);
  const Rational a = positive("a", opt.a);
  const MonteCarloResult result = monte_carlo_check(law, b, a, opt.samples, opt.seed);
  Json doc = {{"command", "mc"},
              {"config",
               {{"law", to_string(law)}, {"b", to_string(b)}, {"a", to_string(a)}, {"samples", opt.samples},
                {"seed", opt.seed}}},
              {"result", to_json(result)}};
  if (opt.common.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, value] : doc["config"].items()) rows.emplace_back(key, json_scalar(value));
    for (const auto& [key, value] : doc["result"].items())
      if (key != "law" && key != "samples" && key != "seed") rows.emplace_back(key, json_scalar(value));
    emit(opt.common, key_value_csv(rows), out);
  } else {
    emit(opt.common, dump(doc), out);
  }
  return result.passes() ? kPass : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of symmetrization inequalities for discrete laws", "symineq"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the comparison inequalities on given or random laws");
  add_common(*verify_cmd, verify.common, "json");
  verify_cmd->add_option("--dist", verify.dist_path, "Distribution JSON file");
  verify_cmd->add_option("--random", verify.random, "Number of seeded random laws");
  verify_cmd->add_option("--seed", verify.seed, "Base seed for --random")->capture_default_str();
  verify_cmd->add_option("--b", verify.b, "Sum window radius")->capture_default_str();
  verify_cmd->add_option("--a", verify.a, "Difference window radius")->capture_default_str();
  verify_cmd->add_option("--max-atoms", verify.max_atoms, "Atom cap for random laws")->capture_default_str();
  verify_cmd->add_option("--dimension", verify.dimension, "Dimension of random laws")->capture_default_str();
  verify_cmd->add_option("--norm-f", verify.norm_f, "Norm of F (1, 2, inf)")->capture_default_str();
  verify_cmd->add_option("--norm-k", verify.norm_k, "Norm of K (1, 2, inf)")->capture_default_str();

  ExtremalOptions extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "Convergence table of the sharpness family");
  add_common(*extremal_cmd, extremal.common, "csv");
  extremal_cmd->add_option("--a", extremal.a, "Difference window radius")->required();
  extremal_cmd->add_option("--n", extremal.n_list, "Comma-separated n values")->capture_default_str();
  extremal_cmd->add_option("--epsilon", extremal.epsilon, "Override the chosen epsilon");
  extremal_cmd->add_option("--r", extremal.r, "Override the chosen offset r");

  CoverOptions cover;
  auto* cover_cmd = app.add_subcommand("cover", "Covering numbers and certificates");
  add_common(*cover_cmd, cover.common, "json");
  cover_cmd->add_option("--b", cover.b, "Radius of F")->required();
  cover_cmd->add_option("--a", cover.a, "Radius of K")->required();
  cover_cmd->add_option("--d", cover.d, "Dimension")->capture_default_str();
  cover_cmd->add_option("--norm-f", cover.norm_f, "Norm of F (1, 2, inf)")->capture_default_str();
  cover_cmd->add_option("--norm-k", cover.norm_k, "Norm of K (1, 2, inf)")->capture_default_str();
  cover_cmd->add_option("--rho", cover.rho, "Scale of the covering copies")->capture_default_str();
  cover_cmd->add_option("--pitch", cover.pitch, "Lattice pitch (default: largest admissible)");

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Adversarial weight search on a fixed 1-d support");
  add_common(*search_cmd, search.common, "json");
  search_cmd->add_option("--support-from", search.support_from, "Support generator (extremal)");
  search_cmd->add_option("--support", search.support, "Comma-separated support points");
  search_cmd->add_option("--a", search.a, "Difference window radius")->capture_default_str();
  search_cmd->add_option("--b", search.b, "Sum window radius")->capture_default_str();
  search_cmd->add_option("--n", search.n, "Extremal family size")->capture_default_str();
  search_cmd->add_option("--epsilon", search.epsilon, "Extremal epsilon override");
  search_cmd->add_option("--r", search.r, "Extremal offset override");
  search_cmd->add_option("--seed", search.search.seed, "Seed")->capture_default_str();
  search_cmd->add_option("--restarts", search.search.restarts, "Random restarts")->capture_default_str();
  search_cmd->add_option("--max-iters", search.search.max_iters, "Outer iterations per restart")->capture_default_str();
  search_cmd->add_option("--inner-iters", search.search.inner_iters, "Replicator steps per outer iteration")
      ->capture_default_str();
  search_cmd->add_option("--tol", search.search.tol, "Outer stopping tolerance")->capture_default_str();

  McOptions mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo check for continuous laws");
  add_common(*mc_cmd, mc.common, "json");
  mc_cmd->add_option("--law", mc.law, "normal, uniform or exponential")->capture_default_str();
  mc_cmd->add_option("--b", mc.b, "Sum window radius")->capture_default_str();
  mc_cmd->add_option("--a", mc.a, "Difference window radius")->capture_default_str();
  mc_cmd->add_option("--samples", mc.samples, "Number of pairs")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "Seed")->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("symineq");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*extremal_cmd) return cmd_extremal(extremal, out, err);
    if (*cover_cmd) return cmd_cover(cover, out);
    if (*search_cmd) return cmd_search(search, out);
    if (*mc_cmd) return cmd_mc(mc, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace symineq::cli
