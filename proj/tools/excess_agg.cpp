// excess_agg: batch experiment runner for online expert aggregation.
//
// Subcommands:
//   run    one experiment (generated or CSV input), writes trajectory.csv,
//          bounds.json, summary.json; exit 0 iff every requested proved
//          bound held.
//   suite  the randomized bound-satisfaction matrix; exit 0 iff no check
//          was violated.
//
// Exit codes: 0 ok, 1 bound violation, 2 input error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exagg/experiment.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitInputError = 2;

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) {
    out.push_back(std::stod(field));
  }
  return out;
}

int fail_input(const std::string& type, const std::string& message) {
  json err;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  std::cout << err.dump() << std::endl;
  return kExitInputError;
}

std::uint64_t seed_fallback(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("EXCESS_AGG_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

int run_command(const std::string& learner_name, const std::string& generator,
                const std::string& losses, const std::string& confidences,
                std::size_t rounds, std::size_t experts, std::uint64_t seed,
                bool seed_given, const std::string& check,
                const std::string& range, const std::string& out_dir,
                bool reduction, const std::string& rates,
                const std::string& means, double alpha, double loss_scale,
                double activity, const std::string& lambda) {
  exagg::experiment::ExperimentConfig config;

  const auto learner = exagg::experiment::parse_learner_kind(learner_name);
  if (!learner) {
    return fail_input("ConfigMismatch", "unknown learner: " + learner_name);
  }
  config.learner = *learner;
  config.reduction = reduction;
  config.seed = seed_fallback(seed, seed_given);
  config.output_dir = out_dir;

  if (!generator.empty()) {
    const auto kind = exagg::sim::parse_generator_kind(generator);
    if (!kind) {
      return fail_input("InvalidSpec", "unknown generator: " + generator);
    }
    exagg::sim::GeneratorSpec spec;
    spec.kind = *kind;
    spec.experts = experts;
    spec.rounds = rounds;
    spec.seed = config.seed;
    spec.alpha = alpha;
    spec.loss_scale = loss_scale;
    spec.activity = activity;
    if (!means.empty()) spec.means = parse_double_list(means);
    if (!lambda.empty()) spec.lambda = parse_double_list(lambda);
    config.generator = spec;
  }
  if (!losses.empty()) config.losses_path = losses;
  if (!confidences.empty()) config.confidences_path = confidences;
  if (!rates.empty()) config.rates = parse_double_list(rates);

  if (!range.empty()) {
    const std::vector<double> bounds_pair = parse_double_list(range);
    if (bounds_pair.size() != 2) {
      return fail_input("ConfigMismatch", "--range expects 'lo,hi'");
    }
    config.range_lo = bounds_pair[0];
    config.range_hi = bounds_pair[1];
  }

  if (!check.empty()) {
    std::stringstream ss(check);
    std::string token;
    while (std::getline(ss, token, ',')) {
      const auto id = exagg::experiment::parse_theorem_id(token);
      if (!id) return fail_input("ConfigMismatch", "unknown theorem: " + token);
      config.checks.push_back(*id);
    }
  }

  try {
    const exagg::experiment::ExperimentResult result =
        exagg::experiment::run_experiment(config);
    if (!result.all_proved_satisfied) {
      json err;
      err["error"]["type"] = "BoundViolation";
      err["error"]["message"] =
          "at least one proved bound was violated; see bounds.json";
      std::cout << err.dump() << std::endl;
      return kExitBoundViolation;
    }
    std::cerr << "wrote " << config.output_dir.string()
              << "/{trajectory.csv,bounds.json,summary.json}" << std::endl;
    return kExitOk;
  } catch (const exagg::CsvParseError& e) {
    return fail_input("CsvParseError", e.what());
  } catch (const exagg::Error& e) {
    return fail_input("InputError", e.what());
  } catch (const std::exception& e) {
    return fail_input("InternalError", e.what());
  }
}

int suite_command(std::size_t seeds, const std::string& scale,
                  std::uint64_t seed, bool seed_given, bool inject_bug) {
  exagg::experiment::SuiteConfig config;
  config.seeds = seeds;
  config.base_seed = seed_fallback(seed, seed_given);
  config.inject_bug = inject_bug;
  if (scale == "small") {
    config.scale = exagg::experiment::SuiteScale::small;
  } else if (scale == "medium") {
    config.scale = exagg::experiment::SuiteScale::medium;
  } else {
    return fail_input("ConfigMismatch", "--scale must be small or medium");
  }

  try {
    const exagg::experiment::SuiteReport report =
        exagg::experiment::check_bounds_suite(config);
    json out;
    out["runs"] = report.runs;
    out["checks"] = report.checks;
    out["violations"] = report.violations;
    out["failures"] = report.failures;
    if (report.negative_control_caught.has_value()) {
      out["negative_control_caught"] = *report.negative_control_caught;
    }
    std::cout << out.dump(2) << std::endl;
    return report.violations == 0 ? kExitOk : kExitBoundViolation;
  } catch (const exagg::Error& e) {
    return fail_input("InputError", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online aggregation of expert predictions with second-order "
               "regret guarantees"};
  app.require_subcommand(1);

  // run
  std::string learner = "adapt_ml_prod";
  std::string generator;
  std::string losses;
  std::string confidences;
  std::size_t rounds = 1000;
  std::size_t experts = 2;
  std::uint64_t seed = 0;
  std::string check;
  std::string range;
  std::string out_dir = "out";
  bool reduction = false;
  std::string rates;
  std::string means;
  double alpha = 0.2;
  double loss_scale = 0.1;
  double activity = 0.5;
  std::string lambda;

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  run->add_option("--learner", learner,
                  "ml_prod | adapt_ml_prod | ml_poly | mlc_hedge");
  run->add_option("--generator", generator,
                  "generator kind (see --help-generators)");
  run->add_option("--losses", losses, "losses CSV (header expert_1,...)");
  run->add_option("--confidences", confidences, "confidences CSV");
  run->add_option("--rounds", rounds, "horizon T for generated input");
  run->add_option("--experts", experts, "expert count K for generated input");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "RNG seed (or env EXCESS_AGG_SEED)");
  run->add_option("--check", check, "comma list of theorem ids "
                                    "(t1,eq5,eq6,t2,c3,t4,c5,isel,iid,t7)");
  run->add_option("--range", range, "pre-rescale loss range 'lo,hi' for CSV");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--reduction", reduction,
                "wrap the learner in the confidence reduction");
  run->add_option("--rates", rates, "fixed rates (ml_prod, mlc_hedge)");
  run->add_option("--means", means, "iid_gap Bernoulli means");
  run->add_option("--alpha", alpha, "iid_gap declared mean gap");
  run->add_option("--loss-scale", loss_scale, "small_loss scale");
  run->add_option("--activity", activity, "confidence_bernoulli activity");
  run->add_option("--lambda", lambda, "confidence_scaled per-expert scales");

  // suite
  std::size_t suite_seeds = 100;
  std::string scale = "small";
  std::uint64_t suite_seed = 0;
  bool inject_bug = false;
  CLI::App* suite =
      app.add_subcommand("suite", "randomized bound-satisfaction matrix");
  suite->add_option("--seeds", suite_seeds, "number of seeded runs");
  suite->add_option("--scale", scale, "small (K<=5,T<=500) or medium "
                                      "(K<=10,T<=5000)");
  CLI::Option* suite_seed_opt =
      suite->add_option("--seed", suite_seed, "base seed");
  suite->add_flag("--inject-bug", inject_bug,
                  "negative control: mis-set ML-Prod's rate to 0.9 and "
                  "check the violation is reported");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return run_command(learner, generator, losses, confidences, rounds,
                       experts, seed, seed_opt->count() > 0, check, range,
                       out_dir, reduction, rates, means, alpha, loss_scale,
                       activity, lambda);
  }
  return suite_command(suite_seeds, scale, suite_seed,
                       suite_seed_opt->count() > 0, inject_bug);
}
