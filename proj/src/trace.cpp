#include "speval/trace.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "speval/sim_eval.hpp"

namespace speval::trace {

GridAlphabet GridAlphabet::for_palette(const RenderPalette& p) {
  GridAlphabet a;
  a.glyphs = {p.start, p.dest, p.road, p.obstacle, p.blank};
  for (const auto& g : p.piece) a.glyphs.push_back(g);
  // open marker set per the observed tracking styles: digits, arrows, marks
  for (char c = '0'; c <= '9'; ++c) a.glyphs.push_back(std::string(1, c));
  for (const char* m : {"*", "X", "x", "O", "o", "@", "+", "^", "v", "<", ">",
                        "←", "↑", "→", "↓"})
    a.glyphs.push_back(m);
  return a;
}

bool GridAlphabet::contains(const std::string& cp) const {
  return std::find(glyphs.begin(), glyphs.end(), cp) != glyphs.end();
}

namespace {

// Cells of a candidate grid line (whitespace dropped), or nullopt if any
// codepoint falls outside the alphabet or the line is blank.
std::optional<std::vector<std::string>> grid_cells(const std::string& line,
                                                   const GridAlphabet& alphabet) {
  std::vector<std::string> cells;
  for (auto& cp : utf8_codepoints(line)) {
    if (cp.size() == 1 && std::isspace(static_cast<unsigned char>(cp[0]))) continue;
    if (!alphabet.contains(cp)) return std::nullopt;
    cells.push_back(cp);
  }
  if (cells.empty()) return std::nullopt;
  return cells;
}

struct Line {
  std::string text;
  size_t offset;
};

std::vector<Line> split_lines(const std::string& raw) {
  std::vector<Line> lines;
  size_t pos = 0;
  while (pos <= raw.size()) {
    size_t nl = raw.find('\n', pos);
    size_t end = nl == std::string::npos ? raw.size() : nl;
    lines.push_back({raw.substr(pos, end - pos), pos});
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

Transcript parse_transcript(const std::string& raw, const GridAlphabet& alphabet,
                            int reasoning_steps,
                            const std::vector<std::string>& answer_keywords) {
  Transcript tr;
  tr.raw = raw;
  tr.l_s = std::max(1, reasoning_steps);

  auto lines = split_lines(raw);
  size_t i = 0;
  while (i < lines.size()) {
    auto first = grid_cells(lines[i].text, alphabet);
    if (!first) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    std::vector<std::string> block_lines = {lines[i].text};
    while (j < lines.size()) {
      auto next = grid_cells(lines[j].text, alphabet);
      if (!next || next->size() != first->size()) break;
      block_lines.push_back(lines[j].text);
      ++j;
    }
    if (block_lines.size() >= 2) {
      VizBlock b;
      b.char_begin = lines[i].offset;
      for (size_t n = 0; n < block_lines.size(); ++n) {
        if (n) b.text += '\n';
        b.text += block_lines[n];
      }
      tr.visualizations.push_back(std::move(b));
      i = j;
    } else {
      ++i;
    }
  }

  // Locate the final answer; visualizations after it do not count toward l_v.
  int rule = 0;
  tr.extracted_answer = eval::extract_answer(raw, answer_keywords, &rule);
  size_t answer_pos = raw.size();
  if (rule == 1) {
    size_t found = raw.rfind(tr.extracted_answer);
    if (found != std::string::npos) answer_pos = found;
  }
  for (VizBlock& b : tr.visualizations) {
    b.before_answer = b.char_begin < answer_pos;
    if (b.before_answer) ++tr.l_v;
  }
  return tr;
}

TrackingRates tracking_rates(std::span<const Transcript> transcripts) {
  if (transcripts.empty()) throw std::invalid_argument("tracking rates over empty input");
  int complete = 0, partial = 0;
  for (const Transcript& t : transcripts) {
    if (t.l_v == t.l_s) ++complete;
    if (t.l_v > 0) ++partial;
  }
  double n = static_cast<double>(transcripts.size());
  return {eval::round2(100.0 * complete / n), eval::round2(100.0 * partial / n)};
}

namespace {

const VizBlock* last_pre_answer_block(const Transcript& tr) {
  const VizBlock* last = nullptr;
  for (const VizBlock& b : tr.visualizations)
    if (b.before_answer) last = &b;
  return last;
}

}  // namespace

VizGrade grade_nav_visualization(const Transcript& tr, const nav::NavMapRecord& rec,
                                 int progress_segments, const RenderPalette& p) {
  VizGrade g;
  const VizBlock* viz = last_pre_answer_block(tr);
  if (!viz) return g;
  g.present = true;

  ParsedGrid parsed;
  try {
    parsed = parse_grid(viz->text, p);
  } catch (const ParseError&) {
    g.reasons.push_back("unparseable");
    return g;
  }
  if (parsed.map.width != rec.map.width || parsed.map.height != rec.map.height) {
    g.reasons.push_back("dimension-mismatch");
    return g;
  }

  // cell-wise alignment against the true map: any differing cell is a marker
  std::set<Coord> markers;
  bool marker_on_obstacle = false;
  for (int r = 0; r < rec.map.height; ++r) {
    for (int c = 0; c < rec.map.width; ++c) {
      Coord at{r, c};
      if (parsed.map.at(at) == rec.map.at(at)) continue;
      markers.insert(at);
      if (rec.map.at(at) == CellKind::Obstacle) marker_on_obstacle = true;
    }
  }
  if (marker_on_obstacle) {
    g.reasons.push_back("marker-on-obstacle");
    return g;
  }
  g.compliant = true;

  // gold state after progress_segments instructions: the path prefix
  int prefix_cells = 0;
  for (int s = 0; s < progress_segments; ++s) prefix_cells += rec.plan.distances[s];
  Coord current = rec.path[prefix_cells];
  std::set<Coord> expected;
  for (int i = 1; i <= prefix_cells; ++i)
    if (rec.path[i] != rec.map.dest) expected.insert(rec.path[i]);

  if (markers.empty()) {
    g.reasons.push_back("no-markers");
    return g;
  }
  bool full_prefix = markers == expected && !expected.empty();
  bool position_only = markers.size() == 1 && *markers.begin() == current;
  if (full_prefix || position_only) {
    g.accurate = true;
  } else {
    g.reasons.push_back("state-mismatch");
  }
  return g;
}

VizGrade grade_tiling_visualization(const Transcript& tr, const std::string& masked_rect_text,
                                    tiling::PieceType query_type,
                                    const std::vector<Coord>& gold_cells,
                                    const RenderPalette& p) {
  VizGrade g;
  const VizBlock* viz = last_pre_answer_block(tr);
  if (!viz) return g;
  g.present = true;

  auto to_rows = [](const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> row;
      for (auto& cp : utf8_codepoints(line)) {
        if (cp.size() == 1 && std::isspace(static_cast<unsigned char>(cp[0]))) continue;
        row.push_back(cp);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
  };

  auto truth = to_rows(masked_rect_text);
  auto seen = to_rows(viz->text);
  if (seen.size() != truth.size()) {
    g.reasons.push_back("dimension-mismatch");
    return g;
  }
  for (size_t r = 0; r < truth.size(); ++r)
    if (seen[r].size() != truth[r].size()) {
      g.reasons.push_back("dimension-mismatch");
      return g;
    }

  const std::string& query_glyph = p.piece[static_cast<size_t>(query_type)];
  std::set<Coord> filled_query;
  bool overwrote_piece = false;
  for (size_t r = 0; r < truth.size(); ++r) {
    for (size_t c = 0; c < truth[r].size(); ++c) {
      if (seen[r][c] == truth[r][c]) continue;
      if (truth[r][c] != p.blank) overwrote_piece = true;
      if (seen[r][c] == query_glyph)
        filled_query.insert({static_cast<int>(r), static_cast<int>(c)});
    }
  }
  if (overwrote_piece) {
    g.reasons.push_back("overlap");
    return g;
  }
  g.compliant = true;

  std::set<Coord> gold(gold_cells.begin(), gold_cells.end());
  if (filled_query == gold) {
    g.accurate = true;
  } else {
    g.reasons.push_back(filled_query.empty() ? "no-fill" : "wrong-placement");
  }
  return g;
}

std::optional<double> spatial_understanding_accuracy(
    std::span<const std::pair<VizGrade, bool>> graded) {
  int accurate = 0, correct = 0;
  for (const auto& [grade, answer_correct] : graded) {
    if (!grade.accurate) continue;
    ++accurate;
    if (answer_correct) ++correct;
  }
  if (accurate == 0) return std::nullopt;
  return static_cast<double>(correct) / accurate;
}

}  // namespace speval::trace
