#include "lpeval/reports.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>

namespace lpeval {

namespace {

using nlohmann::json;

// Shortest round-trip text for a double; CSV files use this so reruns are
// byte-identical and values reload exactly.
std::string number_text(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
  }
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw LpError(ErrorKind::io, "failed writing '" + path.string() + "'");
  }
}

json report_to_json(const MetricsReport& report) {
  return json{{"graph", report.graph_id},
              {"scorer", report.scorer_name},
              {"seed", report.seed},
              {"fraction", report.fraction},
              {"edge_budget", report.edge_budget},
              {"aupr", report.aupr},
              {"caupr", report.caupr},
              {"auroc", report.auroc},
              {"recall_threshold_x", report.recall_threshold_x},
              {"covered_recall", report.covered_recall},
              {"covered_positives", report.covered_positives}};
}

} // namespace

std::string metrics_report_json(const MetricsReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

MetricsReport metrics_report_from_json(const std::string& text) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw LpError(ErrorKind::parse, "metrics report is not valid JSON");
  }
  try {
    MetricsReport report;
    report.graph_id = parsed.at("graph").get<std::string>();
    report.scorer_name = parsed.at("scorer").get<std::string>();
    report.seed = parsed.at("seed").get<std::uint64_t>();
    report.fraction = parsed.at("fraction").get<double>();
    report.edge_budget = parsed.at("edge_budget").get<std::int64_t>();
    report.aupr = parsed.at("aupr").get<double>();
    report.caupr = parsed.at("caupr").get<double>();
    report.auroc = parsed.at("auroc").get<double>();
    report.recall_threshold_x = parsed.at("recall_threshold_x").get<double>();
    report.covered_recall = parsed.at("covered_recall").get<double>();
    report.covered_positives = parsed.at("covered_positives").get<std::int64_t>();
    return report;
  } catch (const json::exception& e) {
    throw LpError(ErrorKind::parse,
                  std::string("metrics report misses fields: ") + e.what());
  }
}

void write_metrics_report(const MetricsReport& report,
                          const std::filesystem::path& path) {
  auto out = open_out(path);
  out << metrics_report_json(report);
  finish(out, path);
}

MetricsReport read_metrics_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return metrics_report_from_json(text);
}

void write_ranking_csv(const ScoredRanking& ranking,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "u,v,score\n";
  for (const auto& entry : ranking.entries) {
    out << entry.u << ',' << entry.v << ',' << number_text(entry.score) << '\n';
  }
  finish(out, path);
}

void write_ranking_sidecar(const ScoredRanking& ranking,
                           const std::filesystem::path& path) {
  auto out = open_out(path);
  out << json{{"scorer", std::string(to_string(ranking.scorer))},
              {"candidate_count", std::ssize(ranking.entries)},
              {"tie_block_count", ranking.tie_block_count()}}
             .dump(2)
      << "\n";
  finish(out, path);
}

void write_curve_csv(const Curve& curve, const std::filesystem::path& path) {
  auto out = open_out(path);
  const bool pr = curve.kind == CurveKind::pr;
  out << (pr ? "cum_tp,cum_fp,precision,recall\n" : "cum_tp,cum_fp,tpr,fpr\n");
  const double positives = static_cast<double>(curve.total_positives);
  const double negatives = static_cast<double>(curve.total_negatives);
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& point = curve.points[i];
    double first;
    double second;
    if (pr) {
      if (point.tp + point.fp > 0) {
        first = static_cast<double>(point.tp) /
                static_cast<double>(point.tp + point.fp);
      } else if (curve.points.size() > 1) {
        // Origin: report the interpolation limit of the first segment.
        const auto& next = curve.points[1];
        first = static_cast<double>(next.tp) /
                static_cast<double>(next.tp + next.fp);
      } else {
        first = 0.0;
      }
      second = positives > 0 ? static_cast<double>(point.tp) / positives : 0.0;
    } else {
      first = positives > 0 ? static_cast<double>(point.tp) / positives : 0.0;
      second = negatives > 0 ? static_cast<double>(point.fp) / negatives : 0.0;
    }
    out << point.tp << ',' << point.fp << ',' << number_text(first) << ','
        << number_text(second) << '\n';
  }
  finish(out, path);
}

namespace {

std::uint64_t fnv1a64_update(std::uint64_t state, const char* data,
                             std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    state ^= static_cast<unsigned char>(data[i]);
    state *= 1099511628211ull;
  }
  return state;
}

std::string hex64(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string text(16, '0');
  for (int i = 15; i >= 0; --i) {
    text[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return text;
}

} // namespace

std::uint64_t fnv1a64_file(const std::filesystem::path& path,
                           std::uint64_t seed_state) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  }
  char buf[1 << 16];
  std::uint64_t state = seed_state;
  while (in) {
    in.read(buf, sizeof buf);
    state = fnv1a64_update(state, buf, static_cast<std::size_t>(in.gcount()));
  }
  return state;
}

void write_split_files(const EdgeSplit& split,
                       const std::filesystem::path& train_path,
                       const std::filesystem::path& test_path,
                       const std::filesystem::path& manifest_path) {
  write_canonical_edges_file(split.train, train_path);
  {
    auto out = open_out(test_path);
    for (const auto& [u, v] : split.test_edges) {
      out << u << ' ' << v << '\n';
    }
    finish(out, test_path);
  }
  std::uint64_t checksum = fnv1a64_file(test_path, fnv1a64_file(train_path));
  json manifest{
      {"seed", split.seed},
      {"fraction", split.fraction},
      {"mode", std::string(to_string(split.train.mode()))},
      {"counts",
       {{"vertices", split.train.vertex_count()},
        {"train_edges", split.train.edge_count()},
        {"test_edges", std::ssize(split.test_edges)},
        {"original_edges", split.original_edge_count()}}},
      {"checksum", hex64(checksum)},
      {"train_file", train_path.filename().string()},
      {"test_file", test_path.filename().string()}};
  auto out = open_out(manifest_path);
  out << manifest.dump(2) << "\n";
  finish(out, manifest_path);
}

void write_variance_csv(const VarianceStudyResult& result,
                        const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "scorer,min_aupr,max_aupr,mean_aupr,stddev_aupr,stddev_over_mean\n";
  for (const auto& row : result.rows) {
    out << to_string(row.scorer) << ',' << number_text(row.summary.min) << ','
        << number_text(row.summary.max) << ',' << number_text(row.summary.mean)
        << ',' << number_text(row.summary.stddev) << ','
        << number_text(row.summary.stddev_over_mean) << '\n';
  }
  finish(out, path);
}

void write_impact_csv(const ImpactStudyResult& result,
                      const std::filesystem::path& path) {
  const MetricsReport* ref = nullptr;
  for (const auto& report : result.reports) {
    if (report.scorer_name == result.reference) ref = &report;
  }
  if (ref == nullptr) {
    throw LpError(ErrorKind::consistency, "impact result misses its reference");
  }
  auto out = open_out(path);
  out << "graph,reference,ref_aupr,ref_caupr,algorithm,aupr_pct_of_ref,"
         "caupr_pct_of_ref,impact\n";
  for (const auto& row : result.rows) {
    out << ref->graph_id << ',' << result.reference << ','
        << number_text(ref->aupr) << ',' << number_text(ref->caupr) << ','
        << row.algorithm << ',' << number_text(row.aupr_pct_of_ref) << ','
        << number_text(row.caupr_pct_of_ref) << ',' << number_text(row.impact)
        << '\n';
  }
  finish(out, path);
}

void write_thresholds_csv(const ImpactStudyResult& result,
                          const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "graph,scorer,recall_threshold,edge_budget\n";
  for (const auto& report : result.reports) {
    out << report.graph_id << ',' << report.scorer_name << ','
        << number_text(report.recall_threshold_x) << ',' << report.edge_budget
        << '\n';
  }
  finish(out, path);
}

std::string error_json(ErrorKind kind, const std::string& message) {
  return json{{"error",
               {{"kind", std::string(to_string(kind))}, {"message", message}}}}
             .dump() +
         "\n";
}

} // namespace lpeval
