// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check re-derives its expectation with an independent oracle
// where one exists.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "speval/harness.hpp"
#include "speval/jsonl.hpp"
#include "speval/nav.hpp"
#include "speval/nlnav.hpp"
#include "speval/report.hpp"
#include "speval/sim_eval.hpp"
#include "speval/tiling.hpp"
#include "speval/trace.hpp"

using namespace speval;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report_line(const char* criterion, bool ok, const std::string& detail = "") {
  std::printf("%s - %s%s%s\n", ok ? "PASS" : "FAIL", criterion, detail.empty() ? "" : ": ",
              detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int count_simple_paths(const GridMap& m, Coord at, std::set<Coord>& visited,
                       std::vector<Coord>& path, std::vector<Coord>* found) {
  if (at == m.dest) {
    if (found) *found = path;
    return 1;
  }
  int total = 0;
  for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
    auto next = step(at, d);
    if (!next || !m.in_bounds(*next) || m.at(*next) == CellKind::Obstacle) continue;
    if (!visited.insert(*next).second) continue;
    path.push_back(*next);
    total += count_simple_paths(m, *next, visited, path, found);
    path.pop_back();
    visited.erase(*next);
  }
  return total;
}

std::set<std::set<std::vector<Coord>>> cell_sets(const tiling::CoverMatrix& m,
                                                 const std::vector<std::vector<int>>& rows) {
  std::set<std::set<std::vector<Coord>>> out;
  for (const auto& sol : rows) {
    std::set<std::vector<Coord>> partition;
    for (int r : sol) partition.insert(m.row_placements[static_cast<size_t>(r)].covered);
    out.insert(partition);
  }
  return out;
}

}  // namespace

int main() {
  const RenderPalette palette = ascii_palette();

  // --- navigation dataset counts -----------------------------------------
  {
    auto t0 = std::chrono::steady_clock::now();
    nav::NavDataset ds = nav::generate_nav_dataset(2, 7);
    double elapsed = seconds_since(t0);
    static const int kExpectedMaps[5] = {8, 16, 32, 64, 128};
    static const int kExpectedNext[5] = {8, 32, 96, 256, 640};
    std::vector<int> next_per_k(6, 0);
    for (const auto& qa : ds.qa)
      if (qa.kind == nav::NavTask::NextStep) ++next_per_k[qa.k - 2];
    bool ok = ds.maps_per_k.size() == 6 && elapsed < 10.0;
    for (int i = 0; i < 5 && ok; ++i)
      ok = ds.maps_per_k[static_cast<size_t>(i)] == kExpectedMaps[i] &&
           next_per_k[static_cast<size_t>(i)] == kExpectedNext[i];
    ok = ok && ds.maps_per_k[5] >= 224 && ds.maps_per_k[5] <= 256;
    std::ostringstream detail;
    detail << "k=7 maps " << ds.maps_per_k[5] << " (expected 248; early-quit rule: total "
           << "distance increments capped at 2k-3), generated in " << eval::format_pct(elapsed)
           << "s";
    report_line("navigation dataset counts are 8/16/32/64/128 for k=2..6 and in [224,256] for k=7",
                ok, detail.str());

    // --- unique-path oracle ----------------------------------------------
    bool unique = true;
    for (const nav::NavMapRecord& rec : ds.maps) {
      std::set<Coord> visited{rec.map.start};
      std::vector<Coord> path{rec.map.start}, found;
      if (count_simple_paths(rec.map, rec.map.start, visited, path, &found) != 1 ||
          found != rec.path) {
        unique = false;
        break;
      }
    }
    report_line("unique-path oracle: every map has exactly one simple path matching the plan",
                unique);
  }

  // --- direction enumeration ----------------------------------------------
  {
    bool ok = true;
    for (int k = 1; k <= 7; ++k)
      ok = ok && nav::enumerate_direction_sequences(k).size() == (1u << (k + 1));
    report_line("direction enumeration yields exactly 2^(k+1) sequences for k=1..7", ok);
  }

  // --- tiling solver cross-validation --------------------------------------
  {
    auto t0 = std::chrono::steady_clock::now();
    tiling::CoverMatrix m = tiling::build_exact_cover_matrix(
        tiling::rect_region(tiling::kRectWidth, tiling::kRectHeight), tiling::standard_slots());
    auto dlx = tiling::solve_exact_cover(m);
    auto sat = tiling::solve_sat_all(tiling::encode_sat(m));
    bool ok = !dlx.empty() && cell_sets(m, dlx) == cell_sets(m, sat);

    Rng rng(21, "acceptance-tiling");
    int tested = 0;
    while (tested < 10 && ok) {
      int w = rng.next_in(2, 4), h = rng.next_in(2, 4);
      if ((w * h) % 4 != 0) continue;
      std::vector<tiling::PieceType> slots;
      for (int i = 0; i < w * h / 4; ++i)
        slots.push_back(tiling::kPieceTypes[static_cast<size_t>(rng.next_below(3))]);
      tiling::CoverMatrix rm = tiling::build_exact_cover_matrix(tiling::rect_region(w, h), slots);
      ok = cell_sets(rm, tiling::solve_exact_cover(rm)) ==
           cell_sets(rm, tiling::solve_sat_all(tiling::encode_sat(rm)));
      ++tested;
    }
    for (const auto& cfg : tiling::enumerate_standard_configurations()) {
      std::set<Coord> covered;
      for (const auto& pl : cfg.placements)
        for (const Coord& c : pl.covered)
          if (!covered.insert(c).second) ok = false;
      if (covered.size() != 20) ok = false;
    }
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 30.0;
    report_line(
        "tiling solvers agree (DLX vs SAT) on the standard and 10 random instances; every "
        "solution covers all cells once",
        ok, eval::format_pct(elapsed) + "s");
  }

  // --- variant algebra ------------------------------------------------------
  report_line("variant algebra: I=2, T=4, L=8",
              tiling::variants_of(tiling::PieceType::I).size() == 2 &&
                  tiling::variants_of(tiling::PieceType::T).size() == 4 &&
                  tiling::variants_of(tiling::PieceType::L).size() == 8);

  // --- QA uniqueness + dataset floors --------------------------------------
  {
    tiling::TilingDataset ds = tiling::generate_tiling_dataset(7, palette);
    bool unique = true;
    for (const tiling::TilingQAInstance& qa : ds.qa) {
      const auto& cfg = ds.configs[static_cast<size_t>(qa.config_index)];
      std::vector<Coord> region;
      std::vector<tiling::PieceType> others;
      std::set<int> masked(qa.masked_slots.begin(), qa.masked_slots.end());
      for (const auto& pl : cfg.placements) {
        if (!masked.count(pl.slot)) continue;
        region.insert(region.end(), pl.covered.begin(), pl.covered.end());
        if (pl.slot != qa.query_slot) others.push_back(pl.type);
      }
      std::sort(region.begin(), region.end());
      const auto& variants = tiling::variants_of(qa.query_type);
      bool a = tiling::variant_completable(
          region, variants[static_cast<size_t>(qa.offered_variants[0])], others);
      bool b = tiling::variant_completable(
          region, variants[static_cast<size_t>(qa.offered_variants[1])], others);
      if (a == b || !(qa.gold_index == 0 ? a : b)) {
        unique = false;
        break;
      }
    }
    std::ostringstream detail;
    detail << ds.two_mask_count << " two-mask, " << ds.three_mask_count
           << " three-mask instances";
    report_line(
        "tiling QA uniqueness: exactly one offered variant completable; >=300 two-mask and "
        ">=150 three-mask instances",
        unique && ds.two_mask_count >= 300 && ds.three_mask_count >= 150, detail.str());
  }

  // --- ring normalization ----------------------------------------------------
  {
    bool ok = nlnav::normalize_ring({{true, 15}, {false, 3}}, 12) == 0;
    Rng rng(31, "acceptance-ring");
    for (int i = 0; i < 1000 && ok; ++i) {
      std::vector<nlnav::RingMove> moves;
      int n = rng.next_in(0, 4);
      for (int j = 0; j < n; ++j) moves.push_back({rng.next_bool(), rng.next_in(1, 30)});
      int base = nlnav::normalize_ring(moves, 12);
      int steps = rng.next_in(1, 30);
      moves.push_back({true, steps});
      moves.push_back({false, steps});
      ok = nlnav::normalize_ring(moves, 12) == base;
    }
    report_line("ring normalization: (cw 15, ccw 3) -> 0; invariant under canceling pairs x1000",
                ok);
  }

  // --- metric fixtures --------------------------------------------------------
  {
    eval::ExecutionTrace full, half;
    full.t = 4;
    half.t = 2;
    eval::MetricRecord m = eval::aggregate_traces(std::vector<eval::ExecutionTrace>{full, half},
                                                  std::vector<int>{4, 4});
    bool ok = m.completing_pct == 75.0 && m.success_pct == 50.0;

    nav::NavDataset ds = nav::generate_nav_dataset(4, 4);
    const nav::NavMapRecord& rec = ds.maps.front();
    eval::ExecutionTrace gold = eval::execute_instructions(rec, nav::expand_plan(rec.plan));
    ok = ok && gold.t == 4 && gold.reached_dest;

    trace::GridAlphabet alphabet = trace::GridAlphabet::for_palette(palette);
    std::string grid = render_grid(rec.map, palette);
    std::vector<trace::Transcript> trs = {
        trace::parse_transcript(grid + "\nstep\n" + grid + "\nThe answer is up.", alphabet, 2),
        trace::parse_transcript(grid + "\nThe answer is up.", alphabet, 3),
        trace::parse_transcript("The answer is up.", alphabet, 2),
    };
    trace::TrackingRates rates = trace::tracking_rates(trs);
    ok = ok && rates.complete_pct == 33.33 && rates.partial_pct == 66.67;
    report_line("metric fixtures: 75.00/50.00 traces and (2,2),(1,3),(0,2) tracking rates", ok);
  }

  // --- grading fixture suite (summary; the full 20-case table lives in the
  // trace unit tests) ---------------------------------------------------------
  {
    nav::NavDataset ds = nav::generate_nav_dataset(3, 3);
    const nav::NavMapRecord& rec = ds.maps.front();
    trace::GridAlphabet alphabet = trace::GridAlphabet::for_palette(palette);

    auto marked = [&](const std::vector<Coord>& marks) {
      std::vector<std::vector<std::string>> g;
      std::istringstream in(render_grid(rec.map, palette));
      std::string line;
      while (std::getline(in, line)) g.push_back(utf8_codepoints(line));
      for (const Coord& c : marks)
        g[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = "*";
      std::string out;
      for (size_t r = 0; r < g.size(); ++r) {
        if (r) out += '\n';
        for (const auto& cp : g[r]) out += cp;
      }
      return out;
    };
    std::vector<Coord> prefix;
    for (size_t i = 1; i + 1 < rec.path.size(); ++i) prefix.push_back(rec.path[i]);
    Coord obstacle{-1, -1};
    for (int r = 0; r < rec.map.height && obstacle.row < 0; ++r)
      for (int c = 0; c < rec.map.width; ++c)
        if (rec.map.at({r, c}) == CellKind::Obstacle) {
          obstacle = {r, c};
          break;
        }

    auto grade = [&](const std::string& viz) {
      trace::Transcript tr =
          trace::parse_transcript(viz + "\nThe answer is up.", alphabet, rec.k, {"up"});
      return trace::grade_nav_visualization(tr, rec, rec.k, palette);
    };
    trace::VizGrade gold = grade(marked(prefix));
    trace::VizGrade violating = grade(marked({obstacle}));
    trace::VizGrade wrong = grade(marked({rec.path[1]}));
    bool ok = gold.compliant && gold.accurate && !violating.compliant && wrong.compliant &&
              !wrong.accurate;
    ok = ok && (!gold.accurate || gold.compliant) && (!wrong.accurate || wrong.compliant);
    report_line("grader labels gold/violating/mismatching visualizations correctly; "
                "accurate implies compliant",
                ok);
  }

  // --- end-to-end with the perfect-oracle mock --------------------------------
  {
    auto t0 = std::chrono::steady_clock::now();
    fs::path run_dir =
        fs::temp_directory_path() / ("speval-accept-" + std::to_string(std::random_device{}()));
    fs::create_directories(run_dir);

    nav::NavDataset nav_ds = nav::generate_nav_dataset(2, 4);
    std::vector<data::QAItem> items = data::nav_items(nav_ds, palette);
    tiling::TilingDataset t_ds = tiling::generate_tiling_dataset(7, palette);
    std::vector<data::QAItem> t_items = data::tiling_items(t_ds, palette);
    t_items.resize(40);
    items.insert(items.end(), t_items.begin(), t_items.end());
    {
      Rng rng(1, "nlnav");
      std::vector<nlnav::NLNavInstance> walks;
      for (int i = 0; i < 20; ++i) {
        nlnav::LandmarkMap map = nlnav::generate_landmark_map(rng, nlnav::default_vocab());
        walks.push_back(nlnav::generate_walk(map, rng, rng.next_in(4, 10)));
      }
      auto w_items = data::nlnav_items(walks, 1);
      items.insert(items.end(), w_items.begin(), w_items.end());
      std::vector<nlnav::RingNavInstance> rings;
      for (int i = 0; i < 20; ++i)
        rings.push_back(nlnav::generate_ring(rng, nlnav::default_vocab(), 12));
      auto r_items = data::ring_items(rings, 1);
      items.insert(items.end(), r_items.begin(), r_items.end());
    }

    harness::ProviderConfig cfg;
    std::vector<harness::Setting> settings = {harness::Setting::VoT};
    harness::MockProvider provider(harness::make_gold_oracle(items, settings, cfg, palette));
    harness::RunOptions opts;
    opts.run_dir = run_dir;
    opts.palette = palette;
    harness::RunSummary summary = harness::run_suite(items, settings, provider, cfg, opts);

    auto records = harness::load_run_records(run_dir);
    auto scores = report::score_run(items, records, palette);
    auto analysis = report::analyze_run(items, records, palette);
    report::write_report(run_dir, items, palette);

    bool ok = summary.failed == 0 && summary.completed == static_cast<int>(items.size());
    std::set<std::string> tasks;
    for (const auto& row : scores) {
      tasks.insert(row.task);
      ok = ok && row.accuracy_pct == 100.0;
      if (row.completing) ok = ok && *row.completing == 1.0;
      if (row.success_pct) ok = ok && *row.success_pct == 100.0;
    }
    for (const auto& row : analysis) ok = ok && row.complete_tracking_pct == 100.0;
    ok = ok && tasks.size() == 5 && fs::exists(run_dir / "report.md");
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 120.0;
    fs::remove_all(run_dir);
    report_line(
        "perfect-oracle end-to-end: accuracy 100%, completing 1.0, success 100%, complete "
        "tracking 100% across all 5 tasks",
        ok, eval::format_pct(elapsed) + "s");
  }

  // --- report shape (model numbers not reproducible) ---------------------------
  {
    std::vector<report::TaskScore> rows = {{"route_planning", "vot", 1, 0, 0.0, 0.4077, 14.72}};
    std::string md = report::scores_markdown(rows);
    std::vector<report::AnalysisRow> arows = {{"route_planning", "vot", 1, 96.2, 100.0, {}, {},
                                               {}}};
    std::string csv = report::tracking_csv(arows);
    bool ok = md.find("| task | setting |") != std::string::npos &&
              md.find("completing") != std::string::npos &&
              csv.find("complete_tracking_pct") != std::string::npos &&
              csv.find("96.20") != std::string::npos;
    report_line(
        "report emits per-task/per-setting score tables and a tracking CSV "
        "(model-dependent values are format targets only)",
        ok);
  }

  if (g_failures) {
    std::printf("%d acceptance criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
