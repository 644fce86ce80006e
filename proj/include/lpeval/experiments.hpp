#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lpeval/metrics.hpp"

namespace lpeval {

enum class BudgetPolicy { train_edges, original_edges };

std::string_view to_string(BudgetPolicy policy); // "train" | "original"
BudgetPolicy budget_policy_from_string(std::string_view text);

/// Seeded preferential-attachment generator: a clique on m+1 vertices, then
/// each new vertex attaches to m distinct existing vertices drawn with
/// probability proportional to degree. Always undirected;
/// edge count = m*vertices - m*(m+1)/2.
struct SyntheticSpec {
  VertexId vertices = 0;
  int edges_per_new_vertex = 1;
  std::uint64_t seed = 0;
};

Graph generate_synthetic(const SyntheticSpec& spec);

struct ExperimentConfig {
  std::string graph_path;                // file source; empty when synthetic
  std::optional<SyntheticSpec> synthetic;
  Mode mode = Mode::undirected;
  std::vector<Scorer> scorers;
  double fraction = 0.1;
  std::vector<std::uint64_t> seeds;      // one base seed, or one per split
  BudgetPolicy budget_policy = BudgetPolicy::train_edges;
  std::filesystem::path out_dir;         // empty: no artifacts, results in memory
  int workers = 0;                       // concurrent (split, scorer) tasks; 0 = auto
  ScoreOptions score_options;
  std::string reference_override;        // impact study; empty = best AUPR
  std::string graph_id;                  // report label; empty = derived
};

Graph load_config_graph(const ExperimentConfig& config);
std::string config_graph_id(const ExperimentConfig& config);

struct ScorerEvaluation {
  MetricsReport report;
  Curve pr_curve;
  Curve roc_curve;
};

/// score_all -> PR/ROC curves -> full metrics report for one split.
ScorerEvaluation evaluate_scorer(const EdgeSplit& split, Scorer scorer,
                                 BudgetPolicy policy,
                                 const ScoreOptions& options,
                                 std::string_view graph_id);

struct VarianceStudyRow {
  Scorer scorer = Scorer::common_neighbors;
  std::vector<double> auprs; // one per seed, in seed order
  VarianceSummary summary;
};

struct VarianceStudyResult {
  std::vector<std::uint64_t> seeds;
  std::vector<VarianceStudyRow> rows;
};

/// k seeded splits, AUPR per (split, scorer), aggregated per scorer. Per-task
/// reports stream to out_dir as they finish, and an interrupted study resumes
/// by reusing any report whose (seed, scorer) file already parses.
VarianceStudyResult run_variance_study(const ExperimentConfig& config, int k);

struct ImpactStudyResult {
  std::string reference;
  std::vector<MetricsReport> reports; // one per scorer, config order
  std::vector<ImpactRow> rows;
};

/// One split, full metrics per scorer, relative table against the reference
/// algorithm (best AUPR unless overridden).
ImpactStudyResult run_impact_study(const ExperimentConfig& config);

} // namespace lpeval
