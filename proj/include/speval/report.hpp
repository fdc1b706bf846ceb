#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "speval/harness.hpp"
#include "speval/jsonl.hpp"

namespace speval::report {

// One scored (task, setting) cell. Route planning is graded by executing the
// extracted instructions; every other task by substring match.
struct TaskScore {
  std::string task;
  std::string setting;
  int n = 0;
  int failed = 0;  // provider failures; graded as incorrect
  double accuracy_pct = 0.0;
  std::optional<double> completing = 0.0;  // mean t/k, route planning only
  std::optional<double> success_pct;       // fraction with t == k, route planning only
};

std::vector<TaskScore> score_run(std::span<const data::QAItem> items,
                                 std::span<const harness::RunRecord> records,
                                 const RenderPalette& p);

std::string scores_markdown(std::span<const TaskScore> rows);
nlohmann::json scores_json(std::span<const TaskScore> rows);

// Transcript analysis per (task, setting): tracking rates over all
// transcripts plus visualization compliance / accuracy / conditional answer
// accuracy where a grader exists (navigation and tiling).
struct AnalysisRow {
  std::string task;
  std::string setting;
  int n = 0;
  double complete_tracking_pct = 0.0;  // l_v == l_s
  double partial_tracking_pct = 0.0;   // l_v > 0
  std::optional<double> compliance_pct;
  std::optional<double> viz_accuracy_pct;
  std::optional<double> spatial_understanding_pct;  // P(correct | accurate viz)
};

std::vector<AnalysisRow> analyze_run(std::span<const data::QAItem> items,
                                     std::span<const harness::RunRecord> records,
                                     const RenderPalette& p);

std::string tracking_csv(std::span<const AnalysisRow> rows);
std::string analysis_markdown(std::span<const AnalysisRow> rows);

// Scores + analysis for everything under run_dir: writes
// scores/scores.json, scores/scores.md, scores/tracking.csv, and report.md.
void write_report(const std::filesystem::path& run_dir, std::span<const data::QAItem> items,
                  const RenderPalette& p);

}  // namespace speval::report
