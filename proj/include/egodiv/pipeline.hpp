#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egodiv/bridges.hpp"
#include "egodiv/diversity.hpp"
#include "egodiv/graph.hpp"
#include "egodiv/io.hpp"
#include "egodiv/kclip.hpp"
#include "egodiv/reputation.hpp"
#include "egodiv/stats.hpp"
#include "json.hpp"

namespace egodiv {

inline constexpr std::string_view kMetricsSchema = "egodiv-metrics v1";
inline constexpr std::string_view kReputationSchema = "egodiv-reputation v1";

enum class OutputFormat { csv, jsonl };
OutputFormat parse_output_format(std::string_view name);

// ---------------------------------------------------------------- metrics

struct MetricsConfig {
  int k = 5;
  std::vector<int> k_sweep;
  RemovalMode mode = RemovalMode::single;
  std::size_t adaptive_threshold = 1000;
  BridgeConfig bridge;
  bool compute_bridged = true;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::csv;

  /// {k} plus the sweep, ascending and unique.
  std::vector<int> all_ks() const;
  ClipConfig clip(int kk) const;
  void validate() const;
};

struct MetricsRow {
  NodeId ego = 0;
  std::optional<DiversityReport> report;  // empty when the ego is unknown
  std::string skip_reason;                // "", "unknown_ego" or "max_followers"
};

/// All measures for one ego. Throws NotFoundError for an unknown ego.
DiversityReport diversity_report(const FollowGraph& g, NodeId ego, const MetricsConfig& cfg);

/// One row per distinct ego, ascending by id. Work fans out over cfg.jobs
/// threads; the result does not depend on the thread count.
std::vector<MetricsRow> compute_metrics(const FollowGraph& g, std::span<const NodeId> egos, const MetricsConfig& cfg);

void write_metrics(std::ostream& out, std::span<const MetricsRow> rows, const MetricsConfig& cfg);

void cmd_metrics(const FollowGraph& g, std::span<const NodeId> egos, const MetricsConfig& cfg, std::ostream& out);

// ------------------------------------------------------------- reputation

struct ReputationRow {
  NodeId user = 0;
  double upvotes_log = 0.0;
  double thanks_log = 0.0;
  double favorites_log = 0.0;
  double reputation_index = 0.0;
  double ensemble_measure = 0.0;
};

/// Rows ascending by user. Throws InputError on an empty input or a
/// duplicated user.
std::vector<ReputationRow> compute_reputation(std::span<const PopularityRecord> records);
void write_reputation(std::ostream& out, std::span<const ReputationRow> rows);
void cmd_reputation(std::span<const PopularityRecord> records, std::ostream& out);

// ------------------------------------------------------------ join tables

/// Id-keyed numeric table used for joins. Empty cells are nullopt.
struct DataTable {
  std::vector<NodeId> ids;
  std::map<std::string, std::vector<std::optional<double>>> columns;
  /// Columns holding raw counts; these get log10(x + 1) before modelling.
  std::set<std::string> count_columns;

  bool has(std::string_view name) const { return columns.contains(std::string(name)); }
  std::optional<std::size_t> row_of(NodeId id) const;

 private:
  mutable std::map<NodeId, std::size_t> index_;
};

/// Every column except `id_column` parses as a number (empty -> nullopt);
/// non-numeric text columns listed in `ignore` are dropped.
DataTable table_from_csv(const CsvTable& csv, std::string_view id_column, bool counts,
                         const std::set<std::string>& ignore = {});

/// Metrics output (CSV or JSONL, detected from content).
DataTable read_metrics_table(const std::filesystem::path& path);
DataTable read_metrics_table(std::istream& in);
DataTable read_reputation_table(std::istream& in);
DataTable read_reputation_table(const std::filesystem::path& path);
/// Covariates: `user` id column plus count columns.
DataTable read_covariates_table(std::istream& in);
DataTable read_covariates_table(const std::filesystem::path& path);

// ------------------------------------------------------------- regression

struct RegressionSpec {
  std::string dependent = "reputation_index";
  std::vector<std::string> predictors;
  bool normalize_dependent = true;
};

struct RegressionReport {
  RegressionSpec spec;
  std::vector<std::string> terms;  // "const" then predictors
  RegressionResult result;
  std::size_t n_dropped = 0;       // rows lacking a requested value
};

/// Joins metrics with outcomes on ego id, log-transforms count columns,
/// min-max normalizes every variable (the dependent only when asked) and
/// fits OLS with an intercept. Throws InputError listing metrics ids absent
/// from `outcomes`, and SingularDesignError for collinear predictors.
RegressionReport cmd_regress(const DataTable& metrics, const DataTable& outcomes, const RegressionSpec& spec);
nlohmann::json to_json(const RegressionReport& report);

// --------------------------------------------------------------- matching

/// Treatment rule for the matching experiment: k-clip diversity is as large
/// as it can be, i.e. equal to the indegree.
bool is_max_diversity(double kclip, double indegree);

struct MatchSpec {
  int k = 5;
  std::vector<std::string> covariates{"indegree"};
  std::string outcome = "reputation_index";
  std::uint64_t seed = 0;
  std::size_t resamples = 10000;
  std::optional<double> caliper;
  unsigned jobs = 1;
};

struct MatchReport {
  MatchResult match;
  std::size_t n_treated = 0;
  std::size_t n_control = 0;
  double treated_mean = 0.0;
  double control_mean = 0.0;
  std::pair<double, double> treated_ci{0.0, 0.0};
  std::pair<double, double> control_ci{0.0, 0.0};
  TTestResult paired;
  std::uint64_t seed = 0;
};

/// Treats egos whose kclip_<k> equals their indegree, matches on the listed
/// covariates (log10(x + 1) each; looked up in `covariates` first, then in
/// the metrics), and compares matched outcomes. Throws InfeasibleError when
/// either group is empty.
MatchReport cmd_match(const DataTable& metrics, const DataTable& outcomes, const DataTable* covariates,
                      const MatchSpec& spec);
nlohmann::json to_json(const MatchReport& report);

// ------------------------------------------------------------- generation

/// Writes synthetic data files into `out_dir` and returns the manifest
/// (also written as manifest.json). Spec kinds: "ego" (EgoGenSpec fields)
/// and "population" (PopulationGenSpec fields). A missing seed is derived
/// from a hash of the spec and reported in the manifest. Throws InputError
/// naming any unknown or ill-typed field.
nlohmann::json cmd_generate(const nlohmann::json& spec, const std::filesystem::path& out_dir);

}  // namespace egodiv
