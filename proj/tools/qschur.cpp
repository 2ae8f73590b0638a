#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qschur/cache.hpp"
#include "qschur/hooks.hpp"
#include "qschur/json_io.hpp"
#include "qschur/macdonald_you.hpp"
#include "qschur/partition.hpp"
#include "qschur/schubert.hpp"
#include "qschur/symfunc.hpp"
#include "qschur/tableaux.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {

struct CoeffArgs {
  std::string kind;
  std::string lambda_text, mu_text, nu_text;
  int n = -1;
  bool cross_check = false;
  std::string format = "text";
  std::string cache_dir;
};

struct ExpandArgs {
  std::string what;
  std::string mu_text, lambda_text, variant = "ab";
  int n = -1;
  std::string format = "text";
};

struct VerifyArgs {
  std::string identity;
  std::string mu_text;
  int max_weight = 6;
  int n = 2;
  int jobs = 1;
  std::string format = "text";
};

struct ShapeArgs {
  std::string shape_text;
  bool shifted = false;
  bool cross_check = false;
  std::string format = "text";
};

std::string cache_dir_or_env(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QSCHUR_CACHE_DIR")) return env;
  return "";
}

// Weight limit for tableau-enumeration cross-checks from the CLI.
constexpr long kTableauCrossCheckLimit = 12;

struct RouteValue {
  std::string route;
  Int value;
};

int report_routes(const std::string& kind, const json& indices,
                  const std::vector<RouteValue>& routes,
                  const CoeffArgs& args) {
  for (size_t i = 1; i < routes.size(); ++i) {
    if (routes[i].value != routes[0].value) {
      std::cerr << "consistency failure for " << kind << ": "
                << routes[0].route << " gives " << routes[0].value.str()
                << " but " << routes[i].route << " gives "
                << routes[i].value.str() << "\n";
      return 3;
    }
  }
  CoeffCache cache(cache_dir_or_env(args.cache_dir));
  std::string key = indices.dump();
  std::string value = cache.get_or_compute(
      kind, key, [&] { return routes[0].value.str(); });
  if (value != routes[0].value.str()) {
    std::cerr << "consistency failure: cache holds " << value
              << ", computed " << routes[0].value.str() << "\n";
    return 3;
  }
  std::vector<std::string> names;
  for (const auto& r : routes) names.push_back(r.route);
  if (args.format == "json") {
    json out = {{"kind", kind},
                {"indices", indices},
                {"value", value},
                {"routes", names}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
    std::string joined;
    for (const auto& name : names)
      joined += (joined.empty() ? "" : ", ") + name;
    std::cerr << "routes: " << joined << "\n";
  }
  return 0;
}

int run_coeff(const CoeffArgs& args) {
  std::vector<RouteValue> routes;
  json indices;
  std::string kind = args.kind;
  if (kind == "g") {
    StrictPartition lambda = StrictPartition::parse(args.lambda_text);
    Partition mu = Partition::parse(args.mu_text);
    indices = json::array({lambda.parts(), mu.parts()});
    auto row = restriction_row(mu);
    auto it = row.find(lambda);
    routes.push_back({"eta-expansion", it == row.end() ? Int(0) : it->second});
    if (args.cross_check) {
      auto qrow = g_from_my(mu);
      auto qit = qrow.find(lambda);
      routes.push_back(
          {"quadratic-expansion", qit == qrow.end() ? Int(0) : qit->second});
      if (mu.weight() <= kTableauCrossCheckLimit) {
        routes.push_back({"tableau-count", g_coeff(lambda, mu)});
        Rat srow = expand_in_schur(pfun_to_m(lambda)).coeff(mu);
        routes.push_back({"schur-row", numerator(srow)});
      }
    }
  } else if (kind == "f" || kind == "e") {
    StrictPartition mu = StrictPartition::parse(args.mu_text);
    StrictPartition nu = StrictPartition::parse(args.nu_text);
    StrictPartition lambda = StrictPartition::parse(args.lambda_text);
    indices = json::array({mu.parts(), nu.parts(), lambda.parts()});
    Rat e = 0;
    if (mu.weight() + nu.weight() == lambda.weight())
      e = expand_in_Q(m_mul(qfun_to_m(mu), qfun_to_m(nu))).coeff(lambda);
    if (kind == "e") {
      routes.push_back({"product-expansion", numerator(e)});
      if (args.cross_check && lambda.weight() <= kTableauCrossCheckLimit)
        routes.push_back({"tableau-count", e_coeff(mu, nu, lambda)});
    } else {
      Rat f = e * Rat(pow2(lambda.length())) /
              Rat(pow2(mu.length() + nu.length()));
      if (!is_integer(f))
        throw ConsistencyError("non-integer f-coefficient");
      routes.push_back({"product-expansion", numerator(f)});
      if (args.cross_check && lambda.weight() <= kTableauCrossCheckLimit)
        routes.push_back({"tableau-count", f_coeff(mu, nu, lambda)});
    }
  } else if (kind == "restrict") {
    Partition mu = Partition::parse(args.mu_text);
    StrictPartition lambda = StrictPartition::parse(args.lambda_text);
    int n = args.n > 0 ? args.n : static_cast<int>(mu.weight());
    indices = json::array({lambda.parts(), mu.parts(), json(n)});
    routes.push_back(
        {"eta-expansion", restrict_to_lagrangian(mu, n).coeff(lambda)});
    if (args.cross_check) {
      auto qrow = g_from_my(mu);
      auto it = qrow.find(lambda);
      Int viaq =
          (it != qrow.end() && fits_staircase(lambda, n)) ? it->second : 0;
      routes.push_back({"quadratic-expansion", viaq});
    }
  } else if (kind == "pushforward") {
    StrictPartition lambda = StrictPartition::parse(args.lambda_text);
    Partition mu = Partition::parse(args.mu_text);
    if (args.n <= 0) throw InvalidInput("pushforward requires --n");
    int n = args.n;
    indices = json::array({lambda.parts(), mu.parts(), json(n)});
    routes.push_back({"duality", pushforward(lambda, n).coeff(mu)});
    if (args.cross_check && mu.weight() <= kTableauCrossCheckLimit &&
        fits_box(mu, n)) {
      routes.push_back(
          {"tableau-count", g_coeff(complement_strict(lambda, n),
                                    complement_box(mu, n))});
    }
  } else {
    throw InvalidInput("unknown coefficient kind: " + kind);
  }
  return report_routes(kind, indices, routes, args);
}

int run_expand(const ExpandArgs& args) {
  if (args.what == "eta") {
    Partition mu = Partition::parse(args.mu_text);
    QExpansion x = expand_in_Q(eta_schur(mu));
    if (args.format == "json")
      std::cout << q_expansion_json(x).dump() << "\n";
    else
      std::cout << q_expansion_to_string(x) << "\n";
  } else if (args.what == "my") {
    Partition mu = Partition::parse(args.mu_text);
    MYVariant variant;
    if (args.variant == "ab")
      variant = MYVariant::AB;
    else if (args.variant == "cd")
      variant = MYVariant::CD;
    else
      throw InvalidInput("variant must be ab or cd");
    QExpansion x = my_expansion(mu, variant);
    if (args.format == "json")
      std::cout << q_expansion_json(x).dump() << "\n";
    else
      std::cout << q_expansion_to_string(x) << "\n";
  } else if (args.what == "restrict") {
    Partition mu = Partition::parse(args.mu_text);
    int n = args.n > 0 ? args.n : static_cast<int>(mu.weight());
    SchubertExpansionLG x = restrict_to_lagrangian(mu, n);
    if (args.format == "json")
      std::cout << schubert_lg_json(x).dump() << "\n";
    else
      std::cout << schubert_lg_to_string(x) << "\n";
  } else if (args.what == "pushforward") {
    StrictPartition lambda = StrictPartition::parse(args.lambda_text);
    if (args.n <= 0) throw InvalidInput("pushforward requires --n");
    SchubertExpansionG x = pushforward(lambda, args.n);
    if (args.format == "json")
      std::cout << schubert_g_json(x).dump() << "\n";
    else
      std::cout << schubert_g_to_string(x) << "\n";
  } else {
    throw InvalidInput("unknown expansion: " + args.what);
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  if (!args.mu_text.empty()) {
    opt.mu = Partition::parse(args.mu_text);
    opt.has_mu = true;
  }
  opt.max_weight = args.max_weight;
  opt.n = args.n;
  opt.jobs = args.jobs;
  VerificationReport report = run_verification(args.identity, opt);
  if (args.format == "json") {
    json out = {{"identity", report.identity},
                {"range", report.range},
                {"instances", report.instances},
                {"pass", report.pass()},
                {"failures", report.failures}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "identity: " << report.identity << "\n"
              << "range: " << report.range << "\n"
              << "instances: " << report.instances << "\n"
              << "result: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : report.failures)
      std::cout << "counterexample: " << f << "\n";
  }
  std::cerr << "wall_ms: " << report.wall_ms << "\n";
  return report.pass() ? 0 : 1;
}

int run_hooks(const ShapeArgs& args) {
  HookData h = args.shifted
                   ? hooks_shifted(StrictPartition::parse(args.shape_text))
                   : hooks_ordinary(Partition::parse(args.shape_text));
  if (args.format == "json") {
    std::cout << hook_data_json(h).dump() << "\n";
    return 0;
  }
  for (const auto& [cell, hook] : h.hooks)
    std::cout << "(" << cell.first << "," << cell.second << "): " << hook
              << "\n";
  std::cout << (args.shifted ? "gbar = " : "fbar = ") << rat_to_string(h.bar)
            << "\n"
            << "degree = " << h.degree.str() << "\n";
  return 0;
}

int run_degree(const ShapeArgs& args) {
  Int via_hooks;
  Int via_count = -1;
  if (args.shifted) {
    StrictPartition lam = StrictPartition::parse(args.shape_text);
    via_hooks = hooks_shifted(lam).degree;
    if (args.cross_check) via_count = count_shifted_syt(lam);
  } else {
    Partition mu = Partition::parse(args.shape_text);
    via_hooks = hooks_ordinary(mu).degree;
    if (args.cross_check) via_count = count_syt(mu);
  }
  if (args.cross_check && via_count != via_hooks) {
    std::cerr << "consistency failure: hooks give " << via_hooks.str()
              << ", enumeration gives " << via_count.str() << "\n";
    return 3;
  }
  if (args.format == "json") {
    json out = {{"shape", args.shape_text},
                {"shifted", args.shifted},
                {"degree", via_hooks.str()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << via_hooks.str() << "\n";
  }
  return 0;
}

int run_frobenius(const std::string& mu_text, const std::string& format) {
  Partition mu = Partition::parse(mu_text);
  FrobeniusForm f = frobenius(mu);
  auto [a, b] = ab_sequences(f);
  auto [c, d] = cd_sequences(f);
  if (format == "json") {
    json out = {{"mu", mu.parts()}, {"alpha", f.alpha}, {"beta", f.beta},
                {"A", a},           {"B", b},           {"C", c},
                {"D", d}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  auto seq = [](const IntSequence& s) {
    std::string t;
    for (size_t i = 0; i < s.size(); ++i)
      t += (i ? "," : "") + std::to_string(s[i]);
    return t;
  };
  std::cout << "(" << seq(f.alpha) << "|" << seq(f.beta) << ")\n"
            << "A = (" << seq(a) << ")\n"
            << "B = (" << seq(b) << ")\n"
            << "C = (" << seq(c) << ")\n"
            << "D = (" << seq(d) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur Q-function expansions, Stembridge coefficients, "
               "and Schubert-class restriction/pushforward tables"};
  app.require_subcommand(1);

  CoeffArgs coeff;
  auto* coeff_cmd =
      app.add_subcommand("coeff", "print one coefficient (exact integer)");
  coeff_cmd->add_option("kind", coeff.kind,
                        "g | f | e | restrict | pushforward")
      ->required();
  coeff_cmd->add_option("--lambda", coeff.lambda_text, "strict partition");
  coeff_cmd->add_option("--mu", coeff.mu_text, "partition");
  coeff_cmd->add_option("--nu", coeff.nu_text, "strict partition");
  coeff_cmd->add_option("--n", coeff.n, "box / staircase size");
  coeff_cmd->add_flag("--cross-check", coeff.cross_check,
                      "require agreement of independent routes");
  coeff_cmd->add_option("--format", coeff.format, "text | json");
  coeff_cmd->add_option("--cache-dir", coeff.cache_dir,
                        "coefficient cache directory (or QSCHUR_CACHE_DIR)");

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "print a full expansion");
  expand_cmd->add_option("what", expand.what,
                         "eta | my | restrict | pushforward")
      ->required();
  expand_cmd->add_option("--mu", expand.mu_text, "partition");
  expand_cmd->add_option("--lambda", expand.lambda_text, "strict partition");
  expand_cmd->add_option("--variant", expand.variant, "ab | cd");
  expand_cmd->add_option("--n", expand.n, "box / staircase size");
  expand_cmd->add_option("--format", expand.format, "text | json");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "check an identity over a range");
  verify_cmd->add_option("identity", verify.identity,
                         "eq12 | eq16 | eq20 | eq24 | eq30 | lemma3 | nonneg")
      ->required();
  verify_cmd->add_option("--mu", verify.mu_text, "single partition");
  verify_cmd->add_option("--max-weight", verify.max_weight,
                         "sweep all partitions up to this weight");
  verify_cmd->add_option("--n", verify.n, "box size (eq24)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads");
  verify_cmd->add_option("--format", verify.format, "text | json");

  ShapeArgs hooks;
  auto* hooks_cmd = app.add_subcommand("hooks", "hook lengths of a shape");
  hooks_cmd->add_option("--shape", hooks.shape_text, "partition")->required();
  hooks_cmd->add_flag("--shifted", hooks.shifted, "shifted diagram");
  hooks_cmd->add_option("--format", hooks.format, "text | json");

  ShapeArgs degree;
  auto* degree_cmd =
      app.add_subcommand("degree", "number of (shifted) standard tableaux");
  degree_cmd->add_option("--shape", degree.shape_text, "partition")->required();
  degree_cmd->add_flag("--shifted", degree.shifted, "shifted diagram");
  degree_cmd->add_flag("--cross-check", degree.cross_check,
                       "compare with direct enumeration");
  degree_cmd->add_option("--format", degree.format, "text | json");

  std::string frob_mu, frob_format = "text";
  auto* frob_cmd =
      app.add_subcommand("frobenius", "Frobenius coordinates and A,B,C,D");
  frob_cmd->add_option("--mu", frob_mu, "partition")->required();
  frob_cmd->add_option("--format", frob_format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*coeff_cmd) return run_coeff(coeff);
    if (*expand_cmd) return run_expand(expand);
    if (*verify_cmd) return run_verify(verify);
    if (*hooks_cmd) return run_hooks(hooks);
    if (*degree_cmd) return run_degree(degree);
    if (*frob_cmd) return run_frobenius(frob_mu, frob_format);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
