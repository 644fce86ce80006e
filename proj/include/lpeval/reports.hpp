#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "lpeval/experiments.hpp"

namespace lpeval {

// Serialization of the toolkit's on-disk artifacts. All writers are
// deterministic: identical inputs produce byte-identical files.

std::string metrics_report_json(const MetricsReport& report);
MetricsReport metrics_report_from_json(const std::string& text);
void write_metrics_report(const MetricsReport& report,
                          const std::filesystem::path& path);
MetricsReport read_metrics_report(const std::filesystem::path& path);

/// Ranking CSV: header "u,v,score", rows in ranking order, scores printed
/// with round-trip precision.
void write_ranking_csv(const ScoredRanking& ranking,
                       const std::filesystem::path& path);
/// Sidecar JSON: {scorer, candidate_count, tie_block_count}.
void write_ranking_sidecar(const ScoredRanking& ranking,
                           const std::filesystem::path& path);

/// Curve CSV, one row per point: "cum_tp,cum_fp,precision,recall" for PR,
/// "cum_tp,cum_fp,tpr,fpr" for ROC.
void write_curve_csv(const Curve& curve, const std::filesystem::path& path);

/// Writes train/test canonical edge lists plus a JSON manifest
/// {seed, fraction, mode, counts, checksum}; the checksum chains FNV-1a 64
/// over the train file bytes then the test file bytes.
void write_split_files(const EdgeSplit& split,
                       const std::filesystem::path& train_path,
                       const std::filesystem::path& test_path,
                       const std::filesystem::path& manifest_path);

void write_variance_csv(const VarianceStudyResult& result,
                        const std::filesystem::path& path);
void write_impact_csv(const ImpactStudyResult& result,
                      const std::filesystem::path& path);
void write_thresholds_csv(const ImpactStudyResult& result,
                          const std::filesystem::path& path);

std::uint64_t fnv1a64_file(const std::filesystem::path& path,
                           std::uint64_t seed_state = 14695981039346656037ull);
std::string error_json(ErrorKind kind, const std::string& message);

} // namespace lpeval
