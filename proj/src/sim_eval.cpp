#include "speval/sim_eval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace speval::eval {

ExecutionTrace execute_instructions(const nav::NavMapRecord& rec,
                                    std::span<const Direction> dirs) {
  const GridMap& map = rec.map;
  ExecutionTrace tr;
  tr.attempted.assign(dirs.begin(), dirs.end());
  Coord pos = map.start;
  for (size_t i = 0; i < dirs.size(); ++i) {
    auto next = step(pos, dirs[i]);
    if (!next || !map.in_bounds(*next)) {
      tr.ignored.push_back({static_cast<int>(i), IgnoreReason::Boundary});
      continue;
    }
    if (map.at(*next) == CellKind::Obstacle) {
      tr.ignored.push_back({static_cast<int>(i), IgnoreReason::Obstacle});
      continue;
    }
    pos = *next;
    tr.executed.push_back({dirs[i], pos});
    ++tr.valid_moves;
  }
  tr.final_pos = pos;
  tr.reached_dest = pos == map.dest;

  // path index of the final cell; the path is self-avoiding so it's unique
  auto it = std::find(rec.path.begin(), rec.path.end(), pos);
  int path_idx = static_cast<int>(it - rec.path.begin());
  int cum = 0;
  tr.t = 0;
  for (size_t s = 0; s < rec.plan.distances.size(); ++s) {
    cum += rec.plan.distances[s];
    if (cum <= path_idx) tr.t = static_cast<int>(s) + 1;
  }
  return tr;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

size_t find_last_ci(const std::string& haystack, const std::string& needle) {
  return lower(haystack).rfind(lower(needle));
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n:.,");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n:.,");
  return s.substr(b, e - b + 1);
}

// Canonicalize direction synonyms word by word.
std::string normalize_direction_text(const std::string& text) {
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (auto d = direction_from_name(word)) out += direction_name(*d);
    else out += word;
    word.clear();
  };
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word += c;
    } else {
      flush();
      out += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::string extract_answer(const std::string& raw, const std::vector<std::string>& keywords,
                           int* rule_hit) {
  static const std::vector<std::string> kMarkers = {"answer is", "Answer:", "final answer"};
  size_t best = std::string::npos;
  size_t best_len = 0;
  for (const auto& m : kMarkers) {
    size_t at = find_last_ci(raw, m);
    if (at != std::string::npos && (best == std::string::npos || at > best)) {
      best = at;
      best_len = m.size();
    }
  }
  if (best != std::string::npos) {
    if (rule_hit) *rule_hit = 1;
    return trim(raw.substr(best + best_len));
  }

  std::istringstream in(raw);
  std::string line, hit;
  std::string raw_lower;
  while (std::getline(in, line)) {
    std::string ll = lower(line);
    for (const auto& kw : keywords) {
      if (ll.find(lower(kw)) != std::string::npos) {
        hit = line;
        break;
      }
    }
  }
  if (!hit.empty()) {
    if (rule_hit) *rule_hit = 2;
    return trim(hit);
  }
  if (rule_hit) *rule_hit = 3;
  return raw;
}

AnswerJudgment score_answer(const std::string& raw, const std::string& gold,
                            const std::vector<std::string>& keywords,
                            bool normalize_directions) {
  AnswerJudgment j;
  j.extracted = extract_answer(raw, keywords, &j.rule);
  std::string hay = lower(j.extracted);
  std::string needle = lower(gold);
  if (normalize_directions) {
    hay = normalize_direction_text(hay);
    needle = normalize_direction_text(needle);
  }
  j.correct = !needle.empty() && hay.find(needle) != std::string::npos;
  return j;
}

std::vector<Direction> parse_direction_words(const std::string& text) {
  std::vector<Direction> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      if (auto d = direction_from_name(word)) out.push_back(*d);
      word.clear();
    }
  };
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) word += c;
    else flush();
  }
  flush();
  return out;
}

double round2(double pct) { return std::round(pct * 100.0) / 100.0; }

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", pct);
  return buf;
}

MetricRecord aggregate_answers(std::span<const AnswerJudgment> judgments) {
  if (judgments.empty()) throw std::invalid_argument("aggregate over empty input");
  MetricRecord r;
  r.n = static_cast<int>(judgments.size());
  int correct = 0;
  for (const auto& j : judgments) correct += j.correct ? 1 : 0;
  r.accuracy_pct = round2(100.0 * correct / r.n);
  return r;
}

MetricRecord aggregate_traces(std::span<const ExecutionTrace> traces, std::span<const int> ks) {
  if (traces.empty() || traces.size() != ks.size())
    throw std::invalid_argument("aggregate over empty or mismatched input");
  MetricRecord r;
  r.n = static_cast<int>(traces.size());
  double completing = 0.0;
  int success = 0;
  for (size_t i = 0; i < traces.size(); ++i) {
    completing += static_cast<double>(traces[i].t) / ks[i];
    if (traces[i].t == ks[i]) ++success;
  }
  r.completing_pct = round2(100.0 * completing / r.n);
  r.success_pct = round2(100.0 * success / r.n);
  return r;
}

}  // namespace speval::eval
