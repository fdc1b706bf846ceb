#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speval/grid.hpp"
#include "speval/nav.hpp"
#include "speval/tiling.hpp"

namespace speval::trace {

struct VizBlock {
  std::string text;          // the block's lines joined by '\n'
  size_t char_begin = 0;     // offset of the first line in the raw transcript
  bool before_answer = false;
};

struct Transcript {
  std::string raw;
  std::vector<VizBlock> visualizations;  // all blocks, in order
  int l_v = 0;  // visualization blocks strictly before the final answer
  int l_s = 1;  // reasoning-step count, supplied per task
  std::string extracted_answer;
};

// Grid alphabet for spotting visualization lines: palette glyphs plus an open
// marker set (digits, arrows, common path marks). A visualization block is a
// maximal run of >= 2 consecutive grid lines with equal cell counts.
struct GridAlphabet {
  std::vector<std::string> glyphs;
  static GridAlphabet for_palette(const RenderPalette& p);
  bool contains(const std::string& codepoint) const;
};

// reasoning_steps is the task-defined l_s: k for route planning, t+1 for
// next-step, masked-piece count for tiling, walk length for NL navigation.
Transcript parse_transcript(const std::string& raw, const GridAlphabet& alphabet,
                            int reasoning_steps,
                            const std::vector<std::string>& answer_keywords = {});

struct TrackingRates {
  double complete_pct = 0.0;  // fraction with l_v == l_s
  double partial_pct = 0.0;   // fraction with l_v > 0
};

TrackingRates tracking_rates(std::span<const Transcript> transcripts);

struct VizGrade {
  bool present = false;  // a pre-answer visualization existed
  bool compliant = false;
  bool accurate = false;
  std::vector<std::string> reasons;
};

// Navigation grading of the last pre-answer visualization. Marker cells are
// cells whose glyph differs from the true map; compliant means dimensions
// match and every marker sits on a non-obstacle cell; accurate means the
// markers trace exactly the gold path prefix after `progress_segments` plan
// instructions (or mark just the current cell).
VizGrade grade_nav_visualization(const Transcript& tr, const nav::NavMapRecord& rec,
                                 int progress_segments, const RenderPalette& p);

// Tiling grading: changed cells must stay inside the masked region
// (compliance); the cells filled with the query piece's glyph must equal the
// gold placement (accuracy).
VizGrade grade_tiling_visualization(const Transcript& tr, const std::string& masked_rect_text,
                                    tiling::PieceType query_type,
                                    const std::vector<Coord>& gold_cells,
                                    const RenderPalette& p);

// P(answer correct | last visualization accurate); nullopt when no
// transcript has an accurate visualization.
std::optional<double> spatial_understanding_accuracy(
    std::span<const std::pair<VizGrade, bool>> graded);

}  // namespace speval::trace
