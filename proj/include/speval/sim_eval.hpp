#pragma once

#include <span>
#include <string>
#include <vector>

#include "speval/grid.hpp"
#include "speval/nav.hpp"

namespace speval::eval {

enum class IgnoreReason { Obstacle, Boundary };

struct ExecutionTrace {
  std::vector<Direction> attempted;
  std::vector<std::pair<Direction, Coord>> executed;  // move and resulting cell
  std::vector<std::pair<int, IgnoreReason>> ignored;  // attempted index, reason
  Coord final_pos{};
  int t = 0;            // completed gold-plan segments at the final cell; 0 <= t <= k
  int valid_moves = 0;  // alternative progress measure, kept for sensitivity runs
  bool reached_dest = false;
};

// Executes unit moves from the map's start. A move into an obstacle or off
// the grid is ignored and the position stays put, so the walker can only
// ever stand on the unique gold path. Progress t is how many full plan
// segments lie behind the final cell; turning back decreases it.
ExecutionTrace execute_instructions(const nav::NavMapRecord& rec,
                                    std::span<const Direction> dirs);

struct AnswerJudgment {
  std::string extracted;
  bool correct = false;
  int rule = 0;  // which extraction rule fired: 1 marker, 2 keyword line, 3 whole output
};

// Extraction tries, in order: text after the last answer marker, the last
// line containing one of `keywords`, then the whole output.
std::string extract_answer(const std::string& raw, const std::vector<std::string>& keywords,
                           int* rule_hit = nullptr);

// Case-insensitive substring match of gold within the extracted answer.
// With normalize_directions, direction synonyms (upward, north, ...) in
// both texts collapse to up/down/left/right first.
AnswerJudgment score_answer(const std::string& raw, const std::string& gold,
                            const std::vector<std::string>& keywords = {},
                            bool normalize_directions = false);

// All direction words appearing in text, in order, synonyms included.
std::vector<Direction> parse_direction_words(const std::string& text);

struct MetricRecord {
  int n = 0;
  double accuracy_pct = 0.0;
  double completing_pct = 0.0;
  double success_pct = 0.0;
};

double round2(double pct);
std::string format_pct(double pct);  // " 2 decimals, e.g. 40.77"

// accuracy = mean(correct), as a percentage rounded to 2 decimals.
MetricRecord aggregate_answers(std::span<const AnswerJudgment> judgments);

// completing = mean(t/k), success = fraction with t == k.
MetricRecord aggregate_traces(std::span<const ExecutionTrace> traces, std::span<const int> ks);

}  // namespace speval::eval
