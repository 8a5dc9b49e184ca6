#include "egodiv/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "egodiv/errors.hpp"
#include "egodiv/rng.hpp"
#include "egodiv/synthgen.hpp"

namespace egodiv {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw InputError("unknown output format '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- metrics

std::vector<int> MetricsConfig::all_ks() const {
  std::vector<int> ks = k_sweep;
  ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

ClipConfig MetricsConfig::clip(int kk) const { return ClipConfig{kk, mode, adaptive_threshold}; }

void MetricsConfig::validate() const {
  for (int kk : all_ks()) clip(kk).validate();
  bridge.validate();
  if (jobs < 1) throw InputError("jobs must be >= 1");
}

DiversityReport diversity_report(const FollowGraph& g, NodeId ego, const MetricsConfig& cfg) {
  const Neighborhood n = ego_neighborhood(g, ego);
  DiversityReport rep;
  rep.ego = ego;
  rep.indegree = n.size();
  rep.weak = weak_diversity(n);
  rep.strong = strong_diversity(n);
  for (int kk : cfg.all_ks()) {
    if (n.size() < 2) {
      rep.kclip[kk] = n.size();
      if (kk == cfg.k && cfg.compute_bridged) {
        rep.bridged_kclip = bridged_k_clip_diversity(n, g, cfg.clip(kk), cfg.bridge);
        rep.bridged_skipped = !rep.bridged_kclip;
      }
      continue;
    }
    const ClipTrace trace = k_clip_decompose(n, cfg.clip(kk));
    rep.kclip[kk] = trace.d_k;
    if (kk == cfg.k && cfg.compute_bridged) {
      rep.bridged_kclip = bridged_k_clip_diversity(trace, n.size(), g, cfg.bridge);
      rep.bridged_skipped = !rep.bridged_kclip;
    }
  }
  return rep;
}

std::vector<MetricsRow> compute_metrics(const FollowGraph& g, std::span<const NodeId> egos, const MetricsConfig& cfg) {
  cfg.validate();
  std::vector<NodeId> order(egos.begin(), egos.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<MetricsRow> rows(order.size());
  auto work = [&](std::size_t i) {
    MetricsRow& row = rows[i];
    row.ego = order[i];
    if (!g.contains(row.ego)) {
      row.skip_reason = "unknown_ego";
      return;
    }
    row.report = diversity_report(g, row.ego, cfg);
    if (row.report->bridged_skipped) row.skip_reason = "max_followers";
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, order.size()))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < order.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 64;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= order.size()) return;
        const std::size_t end = std::min(order.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) work(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

void write_metrics(std::ostream& out, std::span<const MetricsRow> rows, const MetricsConfig& cfg) {
  const auto ks = cfg.all_ks();
  if (cfg.format == OutputFormat::csv) {
    out << "# schema: " << kMetricsSchema << '\n';
    out << "ego,indegree,weak,strong";
    for (int kk : ks) out << ",kclip_" << kk;
    out << ",bridged_kclip,skipped,skip_reason\n";
    for (const auto& row : rows) {
      out << row.ego;
      if (row.report) {
        const auto& r = *row.report;
        out << ',' << r.indegree << ',' << r.weak << ',' << r.strong;
        for (int kk : ks) out << ',' << r.kclip.at(kk);
        out << ',';
        if (r.bridged_kclip) out << *r.bridged_kclip;
      } else {
        out << ",,,";
        for (std::size_t i = 0; i < ks.size(); ++i) out << ',';
        out << ',';
      }
      out << ',' << (row.skip_reason.empty() ? 0 : 1) << ',' << row.skip_reason << '\n';
    }
    return;
  }
  for (const auto& row : rows) {
    json j;
    j["ego"] = row.ego;
    if (row.report) {
      const auto& r = *row.report;
      j["indegree"] = r.indegree;
      j["weak"] = r.weak;
      j["strong"] = r.strong;
      for (int kk : ks) j["kclip_" + std::to_string(kk)] = r.kclip.at(kk);
      j["bridged_kclip"] = r.bridged_kclip ? json(*r.bridged_kclip) : json(nullptr);
    }
    j["skipped"] = !row.skip_reason.empty();
    j["skip_reason"] = row.skip_reason;
    j["schema"] = kMetricsSchema;
    out << j.dump() << '\n';
  }
}

void cmd_metrics(const FollowGraph& g, std::span<const NodeId> egos, const MetricsConfig& cfg, std::ostream& out) {
  const auto rows = compute_metrics(g, egos, cfg);
  write_metrics(out, rows, cfg);
}

// ------------------------------------------------------------- reputation

std::vector<ReputationRow> compute_reputation(std::span<const PopularityRecord> records) {
  if (records.empty()) throw InputError("popularity table has no rows");
  std::vector<PopularityRecord> sorted(records.begin(), records.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.user < b.user; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].user == sorted[i - 1].user) {
      throw InputError("duplicate user " + std::to_string(sorted[i].user) + " in popularity table");
    }
  }
  const auto index = social_reputation_index(sorted);
  const auto ensemble = ensemble_popularity(sorted);
  std::vector<ReputationRow> rows;
  rows.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rows.push_back({sorted[i].user, log_transform(sorted[i].upvotes), log_transform(sorted[i].thanks),
                    log_transform(sorted[i].favorites), index[i], ensemble[i]});
  }
  return rows;
}

void write_reputation(std::ostream& out, std::span<const ReputationRow> rows) {
  out << "# schema: " << kReputationSchema << '\n';
  out << "user,upvotes_log,thanks_log,favorites_log,reputation_index,ensemble_measure\n";
  for (const auto& r : rows) {
    out << r.user << ',' << format_double(r.upvotes_log) << ',' << format_double(r.thanks_log) << ','
        << format_double(r.favorites_log) << ',' << format_double(r.reputation_index) << ','
        << format_double(r.ensemble_measure) << '\n';
  }
}

void cmd_reputation(std::span<const PopularityRecord> records, std::ostream& out) {
  write_reputation(out, compute_reputation(records));
}

// ------------------------------------------------------------ join tables

std::optional<std::size_t> DataTable::row_of(NodeId id) const {
  if (index_.size() != ids.size()) {
    index_.clear();
    for (std::size_t i = 0; i < ids.size(); ++i) index_.emplace(ids[i], i);
  }
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<double> parse_cell(const std::string& text, std::size_t line, const std::string& column) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "non-numeric value '" + text + "' in column '" + column + "'");
  }
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

bool looks_like_jsonl(std::istream& in) {
  while (true) {
    const int c = in.peek();
    if (c == std::char_traits<char>::eof()) return false;
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
      in.get();
      continue;
    }
    return c == '{';
  }
}

DataTable metrics_from_jsonl(std::istream& in) {
  DataTable table;
  std::string line;
  std::size_t number = 0;
  std::vector<json> records;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(number, e.what());
    }
    if (j.value("schema", std::string(kMetricsSchema)) != kMetricsSchema) {
      throw InputError("schema mismatch on line " + std::to_string(number));
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_number() && key != "ego") names.insert(key);
    }
    records.push_back(std::move(j));
  }
  for (const auto& name : names) table.columns[name];
  for (const auto& j : records) {
    table.ids.push_back(j.at("ego").get<NodeId>());
    for (auto& [name, col] : table.columns) {
      auto it = j.find(name);
      col.push_back(it != j.end() && it->is_number() ? std::optional<double>(it->get<double>()) : std::nullopt);
    }
  }
  table.count_columns = names;
  return table;
}

}  // namespace

DataTable table_from_csv(const CsvTable& csv, std::string_view id_column, bool counts,
                         const std::set<std::string>& ignore) {
  DataTable table;
  const std::size_t id_pos = csv.column(id_column);
  for (std::size_t c = 0; c < csv.header.size(); ++c) {
    if (c == id_pos || ignore.contains(csv.header[c])) continue;
    table.columns[csv.header[c]];
    if (counts) table.count_columns.insert(csv.header[c]);
  }
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    table.ids.push_back(parse_node_id(row[id_pos], csv.lines[r]));
    for (std::size_t c = 0; c < csv.header.size(); ++c) {
      if (c == id_pos || ignore.contains(csv.header[c])) continue;
      table.columns[csv.header[c]].push_back(parse_cell(row[c], csv.lines[r], csv.header[c]));
    }
  }
  return table;
}

DataTable read_metrics_table(std::istream& in) {
  if (looks_like_jsonl(in)) return metrics_from_jsonl(in);
  const CsvTable csv = read_csv(in);
  check_schema(csv, kMetricsSchema);
  for (const char* required : {"ego", "indegree", "weak", "strong"}) csv.column(required);
  return table_from_csv(csv, "ego", true, {"skipped", "skip_reason"});
}

DataTable read_metrics_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_metrics_table(in);
}

DataTable read_reputation_table(std::istream& in) {
  const CsvTable csv = read_csv(in);
  check_schema(csv, kReputationSchema);
  csv.column("reputation_index");
  return table_from_csv(csv, "user", false);
}

DataTable read_reputation_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_reputation_table(in);
}

DataTable read_covariates_table(std::istream& in) { return table_from_csv(read_csv(in), "user", true); }

DataTable read_covariates_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_covariates_table(in);
}

// ------------------------------------------------------------- regression

namespace {

struct Source {
  const DataTable* table;
  const std::vector<std::optional<double>>* column;
  bool log;
};

Source locate(const std::string& name, std::initializer_list<const DataTable*> tables) {
  for (const DataTable* t : tables) {
    if (t && t->has(name)) return {t, &t->columns.at(name), t->count_columns.contains(name)};
  }
  throw InputError("unknown variable '" + std::string(name) + "'");
}

std::optional<double> value_for(const Source& s, NodeId id) {
  auto row = s.table->row_of(id);
  if (!row) return std::nullopt;
  auto v = (*s.column)[*row];
  if (v && s.log) {
    if (*v < 0.0) throw InputError("negative count for id " + std::to_string(id));
    v = std::log10(*v + 1.0);
  }
  return v;
}

std::string id_list(const std::vector<NodeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < 20; ++i) out += (i ? ", " : "") + std::to_string(ids[i]);
  if (ids.size() > 20) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

// Metrics ids whose rows are usable; ids missing from `others` are an error.
std::vector<NodeId> joined_ids(const DataTable& metrics, std::initializer_list<const DataTable*> others) {
  std::vector<NodeId> missing;
  for (NodeId id : metrics.ids) {
    for (const DataTable* t : others) {
      if (t && !t->row_of(id)) {
        missing.push_back(id);
        break;
      }
    }
  }
  if (!missing.empty()) throw InputError("join failed; ids without a matching record: " + id_list(missing));
  return metrics.ids;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

RegressionReport cmd_regress(const DataTable& metrics, const DataTable& outcomes, const RegressionSpec& spec) {
  if (spec.predictors.empty()) throw InputError("regression needs at least one predictor");
  const auto ids = joined_ids(metrics, {&outcomes});

  const Source dep = locate(spec.dependent, {&outcomes, &metrics});
  std::vector<Source> preds;
  for (const auto& name : spec.predictors) preds.push_back(locate(name, {&metrics, &outcomes}));

  RegressionReport report;
  report.spec = spec;
  report.terms.push_back("const");
  report.terms.insert(report.terms.end(), spec.predictors.begin(), spec.predictors.end());

  std::vector<double> y;
  std::vector<std::vector<double>> xs(preds.size());
  for (NodeId id : ids) {
    auto yv = value_for(dep, id);
    std::vector<double> row;
    bool complete = yv.has_value();
    for (std::size_t p = 0; p < preds.size() && complete; ++p) {
      auto v = value_for(preds[p], id);
      if (!v) complete = false;
      else row.push_back(*v);
    }
    if (!complete) {
      ++report.n_dropped;
      continue;
    }
    y.push_back(*yv);
    for (std::size_t p = 0; p < preds.size(); ++p) xs[p].push_back(row[p]);
  }

  if (spec.normalize_dependent) y = minmax_normalize(y);
  Eigen::MatrixXd X(static_cast<Eigen::Index>(y.size()), static_cast<Eigen::Index>(preds.size()));
  for (std::size_t p = 0; p < preds.size(); ++p) X.col(static_cast<Eigen::Index>(p)) = to_vector(minmax_normalize(xs[p]));
  report.result = ols(to_vector(y), add_intercept(X));
  return report;
}

json to_json(const RegressionReport& report) {
  const auto& r = report.result;
  json j;
  j["dependent"] = report.spec.dependent;
  j["terms"] = report.terms;
  j["coefficients"] = r.coefficients;
  j["std_errors"] = r.std_errors;
  j["t_values"] = r.t_values;
  json ci = json::array();
  for (const auto& [lo, hi] : r.ci95) ci.push_back({lo, hi});
  j["ci95"] = ci;
  j["p_values"] = r.p_values;
  j["r_squared"] = r.r_squared;
  j["adj_r_squared"] = r.adj_r_squared;
  j["n_obs"] = r.n_obs;
  j["n_dropped"] = report.n_dropped;
  j["normalized_dependent"] = report.spec.normalize_dependent;
  return j;
}

// --------------------------------------------------------------- matching

bool is_max_diversity(double kclip, double indegree) { return kclip == indegree; }

MatchReport cmd_match(const DataTable& metrics, const DataTable& outcomes, const DataTable* covariates,
                      const MatchSpec& spec) {
  if (spec.covariates.empty()) throw InputError("matching needs at least one covariate");
  const std::string kcol = "kclip_" + std::to_string(spec.k);
  if (!metrics.has(kcol)) throw InputError("metrics table has no column '" + kcol + "'");
  const Source kclip{&metrics, &metrics.columns.at(kcol), false};
  const Source indeg{&metrics, &metrics.columns.at("indegree"), false};
  const Source outcome = locate(spec.outcome, {&outcomes});

  std::vector<Source> covs;
  for (const auto& name : spec.covariates) {
    Source s = locate(name, {covariates, &metrics});
    s.log = true;
    covs.push_back(s);
  }

  // Rows without measures (unknown egos) cannot be classified.
  DataTable usable;
  for (std::size_t i = 0; i < metrics.ids.size(); ++i) {
    if (metrics.columns.at(kcol)[i] && metrics.columns.at("indegree")[i]) usable.ids.push_back(metrics.ids[i]);
  }
  const auto ids = joined_ids(usable, {&outcomes, covariates});

  const auto n = static_cast<Eigen::Index>(ids.size());
  Eigen::MatrixXd features(n, static_cast<Eigen::Index>(covs.size()));
  std::vector<bool> treated(ids.size());
  std::vector<double> y(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const NodeId id = ids[i];
    treated[i] = is_max_diversity(*value_for(kclip, id), *value_for(indeg, id));
    auto yv = value_for(outcome, id);
    if (!yv) throw InputError("missing outcome for id " + std::to_string(id));
    y[i] = *yv;
    for (std::size_t c = 0; c < covs.size(); ++c) {
      auto v = value_for(covs[c], id);
      if (!v) throw InputError("missing covariate '" + spec.covariates[c] + "' for id " + std::to_string(id));
      features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = *v;
    }
  }

  MatchReport report;
  report.seed = spec.seed;
  report.n_treated = static_cast<std::size_t>(std::count(treated.begin(), treated.end(), true));
  report.n_control = ids.size() - report.n_treated;
  if (report.n_treated == 0) throw InfeasibleError("experiment infeasible: no ego has maximal k-clip diversity");
  if (report.n_control == 0) throw InfeasibleError("experiment infeasible: every ego has maximal k-clip diversity");

  MatchOptions options;
  options.caliper = spec.caliper;
  report.match = propensity_match(features, treated, ids, spec.covariates, spec.seed, options);
  if (report.match.n_matched < 2) throw InfeasibleError("experiment infeasible: fewer than two matched pairs");

  std::vector<double> yt;
  std::vector<double> yc;
  for (const auto& [t, c] : report.match.rows) {
    yt.push_back(y[t]);
    yc.push_back(y[c]);
  }
  report.treated_mean = mean(yt);
  report.control_mean = mean(yc);
  report.treated_ci = bootstrap_ci(yt, spec.resamples, 0.95, derive_seed(spec.seed, 1), spec.jobs);
  report.control_ci = bootstrap_ci(yc, spec.resamples, 0.95, derive_seed(spec.seed, 2), spec.jobs);
  report.paired = paired_t_test(yt, yc);
  return report;
}

json to_json(const MatchReport& report) {
  json j;
  j["seed"] = report.seed;
  j["n_treated"] = report.n_treated;
  j["n_control"] = report.n_control;
  j["n_matched"] = report.match.n_matched;
  json smd = json::object();
  bool balanced = true;
  for (const auto& [name, value] : report.match.smd_per_covariate) {
    smd[name] = value;
    balanced = balanced && value < 0.1;
  }
  j["smd"] = smd;
  j["balanced"] = balanced;
  j["treated_mean"] = report.treated_mean;
  j["control_mean"] = report.control_mean;
  j["treated_ci95"] = {report.treated_ci.first, report.treated_ci.second};
  j["control_ci95"] = {report.control_ci.first, report.control_ci.second};
  j["paired_t"] = {{"t", report.paired.t}, {"p", report.paired.p}, {"df", report.paired.df},
                   {"zero_variance", report.paired.zero_variance}};
  json pairs = json::array();
  for (const auto& [t, c] : report.match.pairs) pairs.push_back({t, c});
  j["pairs"] = pairs;
  return j;
}

// ------------------------------------------------------------- generation

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename T>
T field(const json& spec, const char* name, T fallback) {
  auto it = spec.find(name);
  if (it == spec.end()) return fallback;
  try {
    if constexpr (std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) throw 0;
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw 0;
    }
    return it->get<T>();
  } catch (...) {
    throw InputError(std::string("spec field '") + name + "' has the wrong type");
  }
}

void reject_unknown(const json& spec, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : spec.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InputError("unknown spec field '" + key + "'");
    }
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
}

}  // namespace

json cmd_generate(const json& spec, const std::filesystem::path& out_dir) {
  if (!spec.is_object()) throw InputError("generation spec must be a JSON object");
  const std::string kind = spec.value("kind", std::string());
  if (kind != "ego" && kind != "population") throw InputError("spec field 'kind' must be \"ego\" or \"population\"");

  json manifest;
  manifest["kind"] = kind;
  std::uint64_t seed = 0;
  if (spec.contains("seed")) {
    seed = field<std::uint64_t>(spec, "seed", 0);
    manifest["seed_source"] = "spec";
  } else {
    seed = fnv1a(spec.dump());
    manifest["seed_source"] = "derived";
  }
  manifest["seed"] = seed;

  std::filesystem::create_directories(out_dir);
  std::ostringstream edges_out;
  std::ostringstream egos_out;
  json files = json::array({"edges.tsv", "egos.txt"});

  if (kind == "ego") {
    reject_unknown(spec, {"kind", "seed", "component_sizes", "intra_edge_prob", "hub_count", "hub_out_fanout",
                          "reciprocal_prob"});
    EgoGenSpec ego_spec;
    ego_spec.component_sizes = field<std::vector<std::size_t>>(spec, "component_sizes", ego_spec.component_sizes);
    ego_spec.intra_edge_prob = field<double>(spec, "intra_edge_prob", 0.0);
    ego_spec.hub_count = field<std::size_t>(spec, "hub_count", 0);
    ego_spec.hub_out_fanout = field<std::size_t>(spec, "hub_out_fanout", 0);
    ego_spec.reciprocal_prob = field<double>(spec, "reciprocal_prob", 0.0);
    ego_spec.seed = seed;
    const GeneratedEgo gen = gen_ego(ego_spec);
    write_edge_list(edges_out, gen.graph);
    const NodeId egos[] = {gen.ego};
    write_ego_list(egos_out, egos);
    manifest["nodes"] = gen.graph.node_count();
    manifest["edges"] = gen.graph.edge_count();
    manifest["n_egos"] = 1;
  } else {
    reject_unknown(spec, {"kind", "seed", "n_egos", "diversity_effect", "noise_sigma"});
    PopulationGenSpec pop_spec;
    pop_spec.n_egos = field<std::size_t>(spec, "n_egos", pop_spec.n_egos);
    pop_spec.diversity_effect = field<double>(spec, "diversity_effect", pop_spec.diversity_effect);
    pop_spec.noise_sigma = field<double>(spec, "noise_sigma", pop_spec.noise_sigma);
    pop_spec.seed = seed;
    const Population pop = gen_population(pop_spec);
    write_edge_list(edges_out, pop.graph);
    write_ego_list(egos_out, pop.egos);
    std::ostringstream popularity_out;
    std::ostringstream covariates_out;
    write_popularity_csv(popularity_out, pop.popularity);
    write_covariates_csv(covariates_out, pop.covariates);
    write_file(out_dir / "popularity.csv", popularity_out.str());
    write_file(out_dir / "covariates.csv", covariates_out.str());
    files.push_back("popularity.csv");
    files.push_back("covariates.csv");
    manifest["nodes"] = pop.graph.node_count();
    manifest["edges"] = pop.graph.edge_count();
    manifest["n_egos"] = pop.egos.size();
  }
  write_file(out_dir / "edges.tsv", edges_out.str());
  write_file(out_dir / "egos.txt", egos_out.str());
  manifest["files"] = files;
  manifest["spec"] = spec;
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

}  // namespace egodiv
