#include "speval/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "speval/prompts.hpp"
#include "speval/sim_eval.hpp"
#include "speval/trace.hpp"

namespace speval::report {

using nlohmann::json;

namespace {

std::map<std::pair<std::string, std::string>, std::vector<const harness::RunRecord*>>
group_records(std::span<const harness::RunRecord> records) {
  std::map<std::pair<std::string, std::string>, std::vector<const harness::RunRecord*>> out;
  for (const harness::RunRecord& r : records) out[{r.task, r.setting}].push_back(&r);
  return out;
}

std::unordered_map<std::string, const data::QAItem*> index_items(
    std::span<const data::QAItem> items) {
  std::unordered_map<std::string, const data::QAItem*> out;
  for (const data::QAItem& item : items) out[item.id] = &item;
  return out;
}

std::string setting_label(const std::string& s) {
  if (s == "cot") return "CoT";
  if (s == "noviz") return "CoT w/o visualization";
  if (s == "vot") return "VoT";
  if (s == "vot_ascii") return "VoT (ascii)";
  return s;
}

std::string fmt_opt(const std::optional<double>& v, bool pct) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), pct ? "%.2f%%" : "%.2f", *v);
  return buf;
}

}  // namespace

std::vector<TaskScore> score_run(std::span<const data::QAItem> items,
                                 std::span<const harness::RunRecord> records,
                                 const RenderPalette& p) {
  auto by_id = index_items(items);
  std::vector<TaskScore> out;

  for (const auto& [key, recs] : group_records(records)) {
    TaskScore row;
    row.task = key.first;
    row.setting = key.second;

    std::vector<eval::AnswerJudgment> judgments;
    std::vector<eval::ExecutionTrace> traces;
    std::vector<int> ks;

    for (const harness::RunRecord* r : recs) {
      auto it = by_id.find(r->id);
      if (it == by_id.end()) continue;
      const data::QAItem& item = *it->second;
      ++row.n;
      if (r->failed) {
        ++row.failed;
        judgments.push_back({});
        if (item.task == "route_planning") {
          traces.push_back({});
          ks.push_back(item.meta.at("k").get<int>());
        }
        continue;
      }
      auto keywords = prompts::answer_keywords(item);
      bool nav_words = item.task == "route_planning" || item.task == "next_step";
      eval::AnswerJudgment judgment = eval::score_answer(r->transcript, item.gold, keywords,
                                                         /*normalize_directions=*/nav_words);
      if (item.task == "route_planning") {
        auto parsed = parse_grid(item.meta.at("map_text").get<std::string>(), p);
        nav::NavMapRecord rec = nav::reconstruct_record(parsed.map);
        auto dirs = eval::parse_direction_words(judgment.extracted);
        eval::ExecutionTrace tr = eval::execute_instructions(rec, dirs);
        traces.push_back(tr);
        ks.push_back(rec.k);
        judgment.correct = tr.t == rec.k;  // route accuracy is plan success
      }
      judgments.push_back(judgment);
    }

    eval::MetricRecord answers = eval::aggregate_answers(judgments);
    row.accuracy_pct = answers.accuracy_pct;
    if (!traces.empty()) {
      eval::MetricRecord m = eval::aggregate_traces(traces, ks);
      row.completing = m.completing_pct / 100.0;
      row.success_pct = m.success_pct;
    } else {
      row.completing.reset();
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string scores_markdown(std::span<const TaskScore> rows) {
  std::ostringstream out;
  out << "| task | setting | n | accuracy | completing | success |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const TaskScore& r : rows) {
    out << "| " << r.task << " | " << setting_label(r.setting) << " | " << r.n << " | "
        << eval::format_pct(r.accuracy_pct) << "% | " << fmt_opt(r.completing, false) << " | "
        << fmt_opt(r.success_pct, true) << " |\n";
  }
  return out.str();
}

json scores_json(std::span<const TaskScore> rows) {
  json out = json::array();
  for (const TaskScore& r : rows) {
    json j{{"task", r.task},
           {"setting", r.setting},
           {"n", r.n},
           {"failed", r.failed},
           {"accuracy_pct", r.accuracy_pct}};
    if (r.completing) j["completing"] = eval::round2(*r.completing * 100.0) / 100.0;
    if (r.success_pct) j["success_pct"] = *r.success_pct;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<AnalysisRow> analyze_run(std::span<const data::QAItem> items,
                                     std::span<const harness::RunRecord> records,
                                     const RenderPalette& p) {
  auto by_id = index_items(items);
  trace::GridAlphabet alphabet = trace::GridAlphabet::for_palette(p);
  std::vector<AnalysisRow> out;

  for (const auto& [key, recs] : group_records(records)) {
    AnalysisRow row;
    row.task = key.first;
    row.setting = key.second;

    std::vector<trace::Transcript> transcripts;
    int graded = 0, compliant = 0, accurate = 0;
    std::vector<std::pair<trace::VizGrade, bool>> grade_pairs;

    for (const harness::RunRecord* r : recs) {
      auto it = by_id.find(r->id);
      if (it == by_id.end() || r->failed) continue;
      const data::QAItem& item = *it->second;
      ++row.n;
      auto keywords = prompts::answer_keywords(item);
      trace::Transcript tr = trace::parse_transcript(r->transcript, alphabet,
                                                     harness::reasoning_steps(item), keywords);
      bool nav_words = item.task == "route_planning" || item.task == "next_step";
      bool correct =
          eval::score_answer(r->transcript, item.gold, keywords, nav_words).correct;

      if (item.task == "route_planning" || item.task == "next_step") {
        auto parsed = parse_grid(item.meta.at("map_text").get<std::string>(), p);
        nav::NavMapRecord rec = nav::reconstruct_record(parsed.map);
        int progress = item.task == "route_planning"
                           ? rec.k
                           : static_cast<int>(item.meta.at("given_instructions").size()) + 1;
        trace::VizGrade g = trace::grade_nav_visualization(tr, rec, progress, p);
        ++graded;
        compliant += g.compliant;
        accurate += g.accurate;
        grade_pairs.push_back({g, correct});
      } else if (item.task == "visual_tiling") {
        auto query = tiling::piece_from_name(item.meta.at("query_piece").get<std::string>());
        std::vector<Coord> gold_cells;
        for (const auto& cell : item.meta.at("gold_cells"))
          gold_cells.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
        trace::VizGrade g = trace::grade_tiling_visualization(
            tr, item.meta.at("rect_text").get<std::string>(),
            query.value_or(tiling::PieceType::I), gold_cells, p);
        ++graded;
        compliant += g.compliant;
        accurate += g.accurate;
        grade_pairs.push_back({g, correct});
      }
      transcripts.push_back(std::move(tr));
    }

    trace::TrackingRates rates = trace::tracking_rates(transcripts);
    row.complete_tracking_pct = rates.complete_pct;
    row.partial_tracking_pct = rates.partial_pct;
    if (graded > 0) {
      row.compliance_pct = eval::round2(100.0 * compliant / graded);
      row.viz_accuracy_pct = eval::round2(100.0 * accurate / graded);
      if (auto su = trace::spatial_understanding_accuracy(grade_pairs))
        row.spatial_understanding_pct = eval::round2(*su * 100.0);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string tracking_csv(std::span<const AnalysisRow> rows) {
  std::ostringstream out;
  out << "task,setting,n,complete_tracking_pct,partial_tracking_pct\n";
  for (const AnalysisRow& r : rows)
    out << r.task << ',' << r.setting << ',' << r.n << ','
        << eval::format_pct(r.complete_tracking_pct) << ','
        << eval::format_pct(r.partial_tracking_pct) << '\n';
  return out.str();
}

std::string analysis_markdown(std::span<const AnalysisRow> rows) {
  std::ostringstream out;
  out << "| task | setting | n | complete tracking | partial tracking | compliance | "
         "viz accuracy | P(correct \\| accurate viz) |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const AnalysisRow& r : rows) {
    out << "| " << r.task << " | " << setting_label(r.setting) << " | " << r.n << " | "
        << eval::format_pct(r.complete_tracking_pct) << "% | "
        << eval::format_pct(r.partial_tracking_pct) << "% | "
        << fmt_opt(r.compliance_pct, true) << " | " << fmt_opt(r.viz_accuracy_pct, true)
        << " | " << fmt_opt(r.spatial_understanding_pct, true) << " |\n";
  }
  return out.str();
}

void write_report(const std::filesystem::path& run_dir, std::span<const data::QAItem> items,
                  const RenderPalette& p) {
  std::vector<harness::RunRecord> records = harness::load_run_records(run_dir);
  std::vector<TaskScore> scores = score_run(items, records, p);
  std::vector<AnalysisRow> analysis = analyze_run(items, records, p);

  std::filesystem::create_directories(run_dir / "scores");
  {
    std::ofstream out(run_dir / "scores" / "scores.json");
    out << scores_json(scores).dump(2) << '\n';
  }
  {
    std::ofstream out(run_dir / "scores" / "scores.md");
    out << scores_markdown(scores);
  }
  {
    std::ofstream out(run_dir / "scores" / "tracking.csv");
    out << tracking_csv(analysis);
  }
  std::ofstream out(run_dir / "report.md");
  out << "# Evaluation report\n\n## Scores\n\n"
      << scores_markdown(scores) << "\n## Transcript analysis\n\n"
      << analysis_markdown(analysis);
}

}  // namespace speval::report
