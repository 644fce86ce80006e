#include "lpeval/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "lpeval/reports.hpp"
#include "rng_util.hpp"

namespace lpeval {

using detail::bounded_draw;

std::string_view to_string(BudgetPolicy policy) {
  return policy == BudgetPolicy::train_edges ? "train" : "original";
}

BudgetPolicy budget_policy_from_string(std::string_view text) {
  if (text == "train") return BudgetPolicy::train_edges;
  if (text == "original") return BudgetPolicy::original_edges;
  throw LpError(ErrorKind::parameter,
                "unknown budget policy '" + std::string(text) +
                    "' (expected train|original)");
}

Graph generate_synthetic(const SyntheticSpec& spec) {
  if (spec.edges_per_new_vertex < 1) {
    throw LpError(ErrorKind::parameter, "edges_per_new_vertex must be >= 1");
  }
  const auto m = static_cast<VertexId>(spec.edges_per_new_vertex);
  if (spec.vertices <= m + 1) {
    throw LpError(ErrorKind::parameter,
                  "need more vertices than the initial clique of " +
                      std::to_string(m + 1));
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * spec.vertices);
  std::vector<VertexId> endpoint_pool;
  endpoint_pool.reserve(2 * static_cast<std::size_t>(m) * spec.vertices);

  auto add_edge = [&](VertexId u, VertexId v) {
    edges.emplace_back(u, v);
    endpoint_pool.push_back(u);
    endpoint_pool.push_back(v);
  };

  for (VertexId u = 0; u <= m; ++u) {
    for (VertexId v = u + 1; v <= m; ++v) add_edge(u, v);
  }

  std::vector<VertexId> targets;
  for (VertexId t = m + 1; t < spec.vertices; ++t) {
    targets.clear();
    while (std::ssize(targets) < static_cast<std::int64_t>(m)) {
      VertexId candidate =
          endpoint_pool[bounded_draw(rng, endpoint_pool.size())];
      if (std::find(targets.begin(), targets.end(), candidate) != targets.end())
        continue;
      targets.push_back(candidate);
    }
    for (VertexId tgt : targets) add_edge(t, tgt);
  }
  return Graph::from_edges(Mode::undirected, std::move(edges), spec.vertices);
}

Graph load_config_graph(const ExperimentConfig& config) {
  if (config.synthetic.has_value()) {
    if (config.mode == Mode::directed) {
      throw LpError(ErrorKind::parameter,
                    "the synthetic generator produces undirected graphs");
    }
    return generate_synthetic(*config.synthetic);
  }
  if (config.graph_path.empty()) {
    throw LpError(ErrorKind::parameter,
                  "experiment config names neither a graph file nor a "
                  "synthetic spec");
  }
  return load_edge_list_file(config.graph_path, config.mode).graph;
}

std::string config_graph_id(const ExperimentConfig& config) {
  if (!config.graph_id.empty()) return config.graph_id;
  if (config.synthetic.has_value()) {
    const auto& s = *config.synthetic;
    return "pa-n" + std::to_string(s.vertices) + "-m" +
           std::to_string(s.edges_per_new_vertex) + "-seed" +
           std::to_string(s.seed);
  }
  auto name = std::filesystem::path(config.graph_path).filename().string();
  return name.empty() ? "graph" : name;
}

ScorerEvaluation evaluate_scorer(const EdgeSplit& split, Scorer scorer,
                                 BudgetPolicy policy,
                                 const ScoreOptions& options,
                                 std::string_view graph_id) {
  ScorerEvaluation eval;
  ScoredRanking ranking = score_all(split.train, scorer, options);
  eval.pr_curve = build_pr_curve(ranking, split);
  eval.roc_curve = build_roc_curve(ranking, split);

  const std::int64_t budget = policy == BudgetPolicy::train_edges
                                  ? split.train.edge_count()
                                  : split.original_edge_count();
  MetricsReport& report = eval.report;
  report.graph_id = std::string(graph_id);
  report.scorer_name = std::string(to_string(scorer));
  report.seed = split.seed;
  report.fraction = split.fraction;
  report.edge_budget = budget;
  report.aupr = aupr(eval.pr_curve);
  report.auroc = auroc(eval.roc_curve);
  report.caupr = caupr(eval.pr_curve, budget);
  report.recall_threshold_x = caupr_recall_threshold(eval.pr_curve, budget);
  report.covered_recall = eval.pr_curve.covered_recall();
  report.covered_positives = eval.pr_curve.covered_positives;
  return eval;
}

namespace {

void run_tasks(int workers, std::int64_t task_count,
               const std::function<void(std::int64_t)>& task) {
  if (workers <= 1 || task_count <= 1) {
    for (std::int64_t i = 0; i < task_count; ++i) task(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    while (true) {
      std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= task_count) break;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = static_cast<int>(
      std::min<std::int64_t>(workers, task_count));
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

int resolve_workers(const ExperimentConfig& config) {
  if (config.workers > 0) return config.workers;
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 4u));
}

std::filesystem::path task_report_path(const ExperimentConfig& config,
                                       std::uint64_t seed, Scorer scorer) {
  return config.out_dir / ("metrics_seed" + std::to_string(seed) + "_" +
                           std::string(to_string(scorer)) + ".json");
}

// Reuse a streamed per-task report when it exists and matches the task;
// compute (and stream) otherwise.
MetricsReport task_report(const ExperimentConfig& config, const EdgeSplit& split,
                          Scorer scorer, const std::string& graph_id) {
  const bool persistent = !config.out_dir.empty();
  std::filesystem::path path;
  if (persistent) {
    path = task_report_path(config, split.seed, scorer);
    if (std::filesystem::exists(path)) {
      try {
        MetricsReport cached = read_metrics_report(path);
        if (cached.seed == split.seed && cached.fraction == split.fraction &&
            cached.scorer_name == to_string(scorer) &&
            cached.graph_id == graph_id) {
          return cached;
        }
      } catch (const LpError&) {
        // Unreadable or stale partial file: recompute below and overwrite.
      }
    }
  }
  ScorerEvaluation eval = evaluate_scorer(split, scorer, config.budget_policy,
                                          config.score_options, graph_id);
  if (persistent) write_metrics_report(eval.report, path);
  return eval.report;
}

std::vector<std::uint64_t> study_seeds(const ExperimentConfig& config, int k) {
  if (config.seeds.empty()) {
    throw LpError(ErrorKind::parameter, "experiment config has no seeds");
  }
  if (std::ssize(config.seeds) == k) return config.seeds;
  if (config.seeds.size() == 1) {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      seeds[static_cast<std::size_t>(i)] =
          config.seeds[0] + static_cast<std::uint64_t>(i);
    return seeds;
  }
  throw LpError(ErrorKind::parameter,
                "expected 1 base seed or exactly " + std::to_string(k) +
                    " seeds, got " + std::to_string(config.seeds.size()));
}

} // namespace

VarianceStudyResult run_variance_study(const ExperimentConfig& config, int k) {
  if (k < 2) {
    throw LpError(ErrorKind::parameter, "variance study needs k >= 2 splits");
  }
  if (config.scorers.empty()) {
    throw LpError(ErrorKind::parameter, "variance study needs >= 1 scorer");
  }
  const std::string graph_id = config_graph_id(config);
  const Graph graph = load_config_graph(config);
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
  }

  VarianceStudyResult result;
  result.seeds = study_seeds(config, k);

  std::vector<EdgeSplit> splits;
  splits.reserve(result.seeds.size());
  for (std::uint64_t seed : result.seeds) {
    splits.push_back(random_split(graph, config.fraction, seed));
  }

  const std::int64_t scorer_count = std::ssize(config.scorers);
  std::vector<MetricsReport> reports(
      static_cast<std::size_t>(scorer_count * k));
  run_tasks(resolve_workers(config), scorer_count * k, [&](std::int64_t i) {
    const auto scorer_idx = static_cast<std::size_t>(i / k);
    const auto seed_idx = static_cast<std::size_t>(i % k);
    reports[static_cast<std::size_t>(i)] =
        task_report(config, splits[seed_idx], config.scorers[scorer_idx],
                    graph_id);
  });

  for (std::int64_t s = 0; s < scorer_count; ++s) {
    VarianceStudyRow row;
    row.scorer = config.scorers[static_cast<std::size_t>(s)];
    for (int i = 0; i < k; ++i) {
      row.auprs.push_back(reports[static_cast<std::size_t>(s * k + i)].aupr);
    }
    row.summary = variance_summary(row.auprs);
    result.rows.push_back(std::move(row));
  }

  if (!config.out_dir.empty()) {
    write_variance_csv(result, config.out_dir / "variance.csv");
  }
  return result;
}

ImpactStudyResult run_impact_study(const ExperimentConfig& config) {
  if (config.scorers.size() < 2) {
    throw LpError(ErrorKind::parameter, "impact study needs >= 2 scorers");
  }
  const std::string graph_id = config_graph_id(config);
  const Graph graph = load_config_graph(config);
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
  }
  if (config.seeds.empty()) {
    throw LpError(ErrorKind::parameter, "experiment config has no seeds");
  }
  EdgeSplit split = random_split(graph, config.fraction, config.seeds[0]);

  ImpactStudyResult result;
  result.reports.resize(config.scorers.size());
  run_tasks(resolve_workers(config), std::ssize(config.scorers),
            [&](std::int64_t i) {
              result.reports[static_cast<std::size_t>(i)] = task_report(
                  config, split, config.scorers[static_cast<std::size_t>(i)],
                  graph_id);
            });

  if (!config.reference_override.empty()) {
    result.reference = config.reference_override;
  } else {
    const auto best = std::max_element(
        result.reports.begin(), result.reports.end(),
        [](const MetricsReport& a, const MetricsReport& b) {
          return a.aupr < b.aupr;
        });
    result.reference = best->scorer_name;
  }
  result.rows = impact_table(result.reports, result.reference);

  if (!config.out_dir.empty()) {
    write_impact_csv(result, config.out_dir / "impact.csv");
    write_thresholds_csv(result, config.out_dir / "thresholds.csv");
  }
  return result;
}

} // namespace lpeval
