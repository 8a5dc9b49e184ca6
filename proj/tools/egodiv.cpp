#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egodiv/errors.hpp"
#include "egodiv/io.hpp"
#include "egodiv/pipeline.hpp"
#include "json.hpp"

using namespace egodiv;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct Options {
  std::string edges, egos, popularity, metrics, reputation, covariates, spec, out;
  int k = 5;
  std::vector<int> k_sweep;
  std::string mode = "single";
  std::size_t adaptive_threshold = 1000;
  double jaccard = 0.2;
  std::size_t max_followers = 10000;
  bool no_bridged = false;
  std::size_t resamples = 10000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  unsigned jobs = 1;
  std::string dependent = "reputation_index";
  std::vector<std::string> predictors;
  bool raw_dependent = false;
  std::vector<std::string> covariate_names{"indegree"};
  std::optional<double> caliper;
};

// Writes to --out when given, stdout otherwise.
template <typename F>
void emit(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  body(out);
}

void run_metrics(const Options& o) {
  MetricsConfig cfg;
  cfg.k = o.k;
  cfg.k_sweep = o.k_sweep;
  cfg.mode = parse_removal_mode(o.mode);
  cfg.adaptive_threshold = o.adaptive_threshold;
  cfg.bridge.threshold = o.jaccard;
  cfg.bridge.max_followers = o.max_followers;
  cfg.compute_bridged = !o.no_bridged;
  cfg.jobs = o.jobs;
  cfg.format = parse_output_format(o.format);
  cfg.validate();

  const FollowGraph g = FollowGraph::from_edge_list(read_edge_list(o.edges));
  std::vector<NodeId> egos;
  if (o.egos.empty()) {
    const auto nodes = g.nodes();
    egos.assign(nodes.begin(), nodes.end());
  } else {
    egos = read_ego_list(o.egos);
  }
  emit(o.out, [&](std::ostream& out) { cmd_metrics(g, egos, cfg, out); });
}

void run_reputation(const Options& o) {
  const auto records = read_popularity_csv(o.popularity);
  emit(o.out, [&](std::ostream& out) { cmd_reputation(records, out); });
}

void run_regress(const Options& o) {
  RegressionSpec spec;
  spec.dependent = o.dependent;
  spec.predictors = o.predictors.empty() ? std::vector<std::string>{"kclip_" + std::to_string(o.k)} : o.predictors;
  spec.normalize_dependent = !o.raw_dependent;
  const auto report = cmd_regress(read_metrics_table(o.metrics), read_reputation_table(o.reputation), spec);
  emit(o.out, [&](std::ostream& out) { out << to_json(report).dump(2) << '\n'; });
}

void run_match(const Options& o) {
  MatchSpec spec;
  spec.k = o.k;
  spec.covariates = o.covariate_names;
  spec.outcome = o.dependent;
  spec.seed = o.seed;
  spec.resamples = o.resamples;
  spec.caliper = o.caliper;
  spec.jobs = o.jobs;
  const DataTable metrics = read_metrics_table(o.metrics);
  const DataTable outcomes = read_reputation_table(o.reputation);
  std::optional<DataTable> covariates;
  if (!o.covariates.empty()) covariates = read_covariates_table(o.covariates);
  const auto report = cmd_match(metrics, outcomes, covariates ? &*covariates : nullptr, spec);
  emit(o.out, [&](std::ostream& out) { out << to_json(report).dump(2) << '\n'; });
}

void run_generate(const Options& o) {
  std::ifstream in(o.spec);
  if (!in) throw InputError("cannot open " + o.spec);
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  std::cout << cmd_generate(spec, o.out).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Structural diversity measures for directed ego networks"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Output file (default stdout)"); };

  auto* metrics = app.add_subcommand("metrics", "Per-ego diversity measures");
  metrics->add_option("--edges", o.edges, "Edge list: follower<TAB>followee")->required();
  metrics->add_option("--egos", o.egos, "Ego ids, one per line (default: every node)");
  metrics->add_option("--k", o.k, "Clip level")->capture_default_str();
  metrics->add_option("--k-sweep", o.k_sweep, "Extra clip levels")->delimiter(',');
  metrics->add_option("--mode", o.mode, "single|multiple|adaptive")->capture_default_str();
  metrics->add_option("--multi-removal-threshold", o.adaptive_threshold)->capture_default_str();
  metrics->add_option("--jaccard-threshold", o.jaccard)->capture_default_str();
  metrics->add_option("--max-followers", o.max_followers)->capture_default_str();
  metrics->add_flag("--no-bridged", o.no_bridged, "Skip the bridged measure");
  metrics->add_option("--format", o.format, "csv|jsonl")->capture_default_str();
  metrics->add_option("--jobs", o.jobs)->capture_default_str();
  add_out(metrics);

  auto* reputation = app.add_subcommand("reputation", "Social reputation index from popularity counts");
  reputation->add_option("--popularity", o.popularity, "CSV: user,upvotes,thanks,favorites")->required();
  add_out(reputation);

  auto* regress = app.add_subcommand("regress", "OLS of an outcome on diversity measures");
  regress->add_option("--metrics", o.metrics, "Output of `metrics`")->required();
  regress->add_option("--reputation", o.reputation, "Output of `reputation`")->required();
  regress->add_option("--predictors", o.predictors, "Predictor columns (default kclip_<k>)")->delimiter(',');
  regress->add_option("--k", o.k)->capture_default_str();
  regress->add_option("--dependent", o.dependent)->capture_default_str();
  regress->add_flag("--raw-dependent", o.raw_dependent, "Do not min-max normalize the dependent variable");
  add_out(regress);

  auto* match = app.add_subcommand("match", "Propensity-score matching on maximal k-clip diversity");
  match->add_option("--metrics", o.metrics)->required();
  match->add_option("--reputation", o.reputation)->required();
  match->add_option("--covariates", o.covariates, "CSV keyed by user with count columns");
  match->add_option("--covariate-names", o.covariate_names)->delimiter(',')->capture_default_str();
  match->add_option("--dependent", o.dependent, "Outcome column")->capture_default_str();
  match->add_option("--k", o.k)->capture_default_str();
  match->add_option("--seed", o.seed)->capture_default_str();
  match->add_option("--resamples", o.resamples)->capture_default_str();
  match->add_option("--caliper", o.caliper);
  match->add_option("--jobs", o.jobs)->capture_default_str();
  add_out(match);

  auto* generate = app.add_subcommand("generate", "Synthetic data from a JSON spec");
  generate->add_option("--spec", o.spec)->required();
  generate->add_option("--out", o.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*metrics) run_metrics(o);
    else if (*reputation) run_reputation(o);
    else if (*regress) run_regress(o);
    else if (*match) run_match(o);
    else if (*generate) run_generate(o);
  } catch (const InfeasibleError& e) {
    std::cerr << "egodiv: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InputError& e) {
    std::cerr << "egodiv: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotFoundError& e) {
    std::cerr << "egodiv: " << e.what() << '\n';
    return kExitInput;
  } catch (const SingularDesignError& e) {
    std::cerr << "egodiv: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "egodiv: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
