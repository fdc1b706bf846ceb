#include <doctest.h>

#include <sstream>
#include <set>

#include "speval/nav.hpp"
#include "speval/tiling.hpp"
#include "speval/trace.hpp"

using namespace speval;
using namespace speval::trace;

namespace {

const RenderPalette kP = ascii_palette();

// The true map with the given cells replaced by the '*' marker.
std::string marked_map(const nav::NavMapRecord& rec, const std::vector<Coord>& marks) {
  std::vector<std::vector<std::string>> grid;
  std::string base = render_grid(rec.map, kP);
  std::string line;
  std::istringstream in(base);
  while (std::getline(in, line)) grid.push_back(utf8_codepoints(line));
  for (const Coord& c : marks) grid[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = "*";
  std::string out;
  for (size_t r = 0; r < grid.size(); ++r) {
    if (r) out += '\n';
    for (const auto& cp : grid[r]) out += cp;
  }
  return out;
}

std::vector<Coord> full_prefix(const nav::NavMapRecord& rec) {
  std::vector<Coord> marks;
  for (size_t i = 1; i + 1 < rec.path.size(); ++i) marks.push_back(rec.path[i]);
  return marks;
}

Coord first_obstacle(const GridMap& m) {
  for (int r = 0; r < m.height; ++r)
    for (int c = 0; c < m.width; ++c)
      if (m.at({r, c}) == CellKind::Obstacle) return {r, c};
  FAIL("map has no obstacle");
  return {0, 0};
}

Transcript parse_nav(const std::string& raw, int l_s) {
  return parse_transcript(raw, GridAlphabet::for_palette(kP), l_s, {"up", "down", "left",
                                                                    "right"});
}

struct TilingFixture {
  std::string rect_text;
  tiling::PieceType query_type;
  std::vector<Coord> gold_cells;
  std::vector<Coord> mask_cells;  // all blanked cells
  int mask_count = 0;
};

TilingFixture tiling_fixture() {
  RenderPalette p = ascii_palette();
  tiling::TilingDataset ds = tiling::generate_tiling_dataset(7, p);
  REQUIRE(!ds.qa.empty());
  const tiling::TilingQAInstance& qa = ds.qa.front();
  TilingFixture f;
  f.rect_text = qa.rect_text;
  f.query_type = qa.query_type;
  f.mask_count = qa.mask_count;
  std::set<int> masked(qa.masked_slots.begin(), qa.masked_slots.end());
  for (const tiling::Placement& pl :
       ds.configs[static_cast<size_t>(qa.config_index)].placements) {
    if (!masked.count(pl.slot)) continue;
    f.mask_cells.insert(f.mask_cells.end(), pl.covered.begin(), pl.covered.end());
    if (pl.slot == qa.query_slot) f.gold_cells = pl.covered;
  }
  return f;
}

std::string fill_cells(const std::string& rect_text, const std::vector<Coord>& cells,
                       const std::string& glyph) {
  std::vector<std::vector<std::string>> grid;
  std::string line;
  std::istringstream in(rect_text);
  while (std::getline(in, line)) grid.push_back(utf8_codepoints(line));
  for (const Coord& c : cells) grid[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = glyph;
  std::string out;
  for (size_t r = 0; r < grid.size(); ++r) {
    if (r) out += '\n';
    for (const auto& cp : grid[r]) out += cp;
  }
  return out;
}

}  // namespace

TEST_CASE("l_v counts interleaved pre-answer blocks") {
  nav::NavMapRecord rec = nav::generate_nav_dataset(2, 2).maps.front();
  std::string grid = render_grid(rec.map, kP);
  std::string raw = "Step 1 thinking.\n" + grid + "\nStep 2 thinking.\n" + grid +
                    "\nThe answer is up.";
  Transcript tr = parse_nav(raw, 2);
  CHECK(tr.l_v == 2);
  CHECK(tr.l_s == 2);
  CHECK(tr.visualizations.size() == 2);
}

TEST_CASE("visualizations after the answer are filtered from l_v") {
  nav::NavMapRecord rec = nav::generate_nav_dataset(2, 2).maps.front();
  std::string grid = render_grid(rec.map, kP);
  std::string raw = "The answer is up.\nHere is the state anyway:\n" + grid;
  Transcript tr = parse_nav(raw, 2);
  CHECK(tr.l_v == 0);
  CHECK(tr.visualizations.size() == 1);
  // removing post-answer text never changes l_v
  Transcript head = parse_nav("The answer is up.", 2);
  CHECK(head.l_v == tr.l_v);
}

TEST_CASE("prose-only transcripts have l_v = 0 and l_s >= 1") {
  Transcript tr = parse_nav("I cannot visualize anything here. The answer is left.", 0);
  CHECK(tr.l_v == 0);
  CHECK(tr.l_s == 1);
  CHECK(tr.visualizations.empty());
}

TEST_CASE("single grid lines do not form a visualization block") {
  Transcript tr = parse_nav("S.\nthen we continue\nThe answer is up.", 2);
  CHECK(tr.visualizations.empty());
}

TEST_CASE("tracking rates on the (2,2),(1,3),(0,2) fixture set") {
  nav::NavMapRecord rec = nav::generate_nav_dataset(2, 2).maps.front();
  std::string grid = render_grid(rec.map, kP);
  std::vector<Transcript> trs = {
      parse_nav(grid + "\nstep\n" + grid + "\nThe answer is up.", 2),
      parse_nav(grid + "\nThe answer is up.", 3),
      parse_nav("The answer is up.", 2),
  };
  REQUIRE(trs[0].l_v == 2);
  REQUIRE(trs[1].l_v == 1);
  REQUIRE(trs[2].l_v == 0);
  TrackingRates rates = tracking_rates(trs);
  CHECK(rates.complete_pct == doctest::Approx(33.33));
  CHECK(rates.partial_pct == doctest::Approx(66.67));
  CHECK_THROWS(tracking_rates(std::vector<Transcript>{}));
}

TEST_CASE("grading fixture suite matches hand-assigned labels") {
  nav::NavMapRecord rec = nav::generate_nav_dataset(3, 3).maps.front();
  TilingFixture tf = tiling_fixture();
  const std::string q_glyph = kP.piece[static_cast<size_t>(tf.query_type)];
  std::string answer = "\nThe answer is up.";
  std::string t_answer = "\nThe answer is option 1.";

  struct Fixture {
    std::string name;
    std::string raw;
    bool nav = true;
    int progress = 0;
    bool present, compliant, accurate;
    std::string reason;  // required tag, empty = no constraint
  };

  std::string gold_viz = marked_map(rec, full_prefix(rec));
  std::string pos_viz = marked_map(rec, {rec.path[static_cast<size_t>(rec.plan.distances[0])]});
  std::string obstacle_viz = marked_map(rec, {first_obstacle(rec.map)});
  std::string wrong_viz = marked_map(rec, {rec.path[2]});
  std::string partial_viz = marked_map(rec, {rec.path[1]});
  std::string plain_viz = render_grid(rec.map, kP);
  std::string wide_viz;
  {
    std::istringstream in(plain_viz);
    std::string line;
    while (std::getline(in, line)) wide_viz += line + "#\n";
    wide_viz.pop_back();
  }
  std::string ragged_viz = "S .\n. D  \n";  // equal cell counts, ragged raw codepoints

  std::string t_gold = fill_cells(tf.rect_text, tf.gold_cells, q_glyph);
  // an unmasked cell whose glyph differs from the query glyph, so filling it
  // both changes the text and overwrites an existing piece
  std::vector<Coord> non_mask;
  {
    std::vector<std::vector<std::string>> grid;
    std::istringstream in(tf.rect_text);
    std::string line;
    while (std::getline(in, line)) grid.push_back(utf8_codepoints(line));
    for (size_t r = 0; r < grid.size() && non_mask.empty(); ++r)
      for (size_t c = 0; c < grid[r].size(); ++c)
        if (grid[r][c] != kP.blank && grid[r][c] != q_glyph) {
          non_mask.push_back({static_cast<int>(r), static_cast<int>(c)});
          break;
        }
  }
  REQUIRE(!non_mask.empty());
  std::string t_overlap = fill_cells(t_gold, non_mask, q_glyph);
  std::vector<Coord> wrong_fill(tf.mask_cells.begin(), tf.mask_cells.end());
  wrong_fill.resize(4);
  std::string t_wrong = fill_cells(tf.rect_text, wrong_fill, q_glyph);
  bool wrong_is_gold = std::set<Coord>(wrong_fill.begin(), wrong_fill.end()) ==
                       std::set<Coord>(tf.gold_cells.begin(), tf.gold_cells.end());
  std::string other_glyph = q_glyph == kP.piece[0] ? kP.piece[1] : kP.piece[0];
  std::string t_other = fill_cells(tf.rect_text, tf.gold_cells, other_glyph);
  std::string t_wide = tf.rect_text + "\n" + std::string(5, '_');

  std::vector<Fixture> fixtures = {
      {"nav gold prefix", gold_viz + answer, true, rec.k, true, true, true, ""},
      {"nav position only", pos_viz + answer, true, 1, true, true, true, ""},
      {"nav marker on obstacle", obstacle_viz + answer, true, rec.k, true, false, false,
       "marker-on-obstacle"},
      {"nav dimension mismatch", wide_viz + answer, true, rec.k, true, false, false,
       "dimension-mismatch"},
      {"nav unparseable", ragged_viz + answer, true, rec.k, true, false, false, "unparseable"},
      {"nav prose only", "no grids here" + answer, true, rec.k, false, false, false, ""},
      {"nav viz after answer", answer.substr(1) + "\n" + gold_viz, true, rec.k, false, false,
       false, ""},
      {"nav wrong marker", wrong_viz + answer, true, rec.k, true, true, false,
       "state-mismatch"},
      {"nav no markers", plain_viz + answer, true, rec.k, true, true, false, "no-markers"},
      {"nav partial prefix", partial_viz + answer, true, rec.k, true, true, false,
       "state-mismatch"},
      {"nav pre+post answer keeps last pre", gold_viz + answer + "\n" + pos_viz, true, rec.k,
       true, true, true, ""},
      {"nav two blocks last counts", pos_viz + "\nstep\n" + gold_viz + answer, true, rec.k,
       true, true, true, ""},
      {"tiling gold fill", t_gold + t_answer, false, 0, true, true, true, ""},
      {"tiling overlap", t_overlap + t_answer, false, 0, true, false, false, "overlap"},
      {"tiling wrong placement", t_wrong + t_answer, false, 0, true, true, wrong_is_gold, ""},
      {"tiling no fill", tf.rect_text + t_answer, false, 0, true, true, false, "no-fill"},
      {"tiling other glyph fill", t_other + t_answer, false, 0, true, true, false, ""},
      {"tiling dimension mismatch", t_wide + t_answer, false, 0, true, false, false,
       "dimension-mismatch"},
      {"tiling prose only", "thinking..." + t_answer, false, 0, false, false, false, ""},
      {"tiling viz after answer", t_answer.substr(1) + "\n" + t_gold, false, 0, false, false,
       false, ""},
  };
  REQUIRE(fixtures.size() == 20);

  GridAlphabet alphabet = GridAlphabet::for_palette(kP);
  for (const Fixture& f : fixtures) {
    CAPTURE(f.name);
    Transcript tr = parse_transcript(f.raw, alphabet, 1, {"up", "option"});
    VizGrade g = f.nav ? grade_nav_visualization(tr, rec, f.progress, kP)
                       : grade_tiling_visualization(tr, tf.rect_text, tf.query_type,
                                                    tf.gold_cells, kP);
    CHECK(g.present == f.present);
    CHECK(g.compliant == f.compliant);
    CHECK(g.accurate == f.accurate);
    if (!f.reason.empty())
      CHECK(std::find(g.reasons.begin(), g.reasons.end(), f.reason) != g.reasons.end());
    // invariant: accurate implies compliant
    CHECK((!g.accurate || g.compliant));
  }
}

TEST_CASE("spatial understanding accuracy") {
  VizGrade acc{true, true, true, {}};
  VizGrade inacc{true, true, false, {}};
  std::vector<std::pair<VizGrade, bool>> graded = {{acc, true}, {acc, true}, {acc, true},
                                                   {acc, false}, {inacc, false}};
  auto p = spatial_understanding_accuracy(graded);
  REQUIRE(p.has_value());
  CHECK(*p == doctest::Approx(0.75));
  std::vector<std::pair<VizGrade, bool>> none = {{inacc, true}};
  CHECK(!spatial_understanding_accuracy(none).has_value());
}
