#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speval/grid.hpp"
#include "speval/rng.hpp"

namespace speval::nlnav {

inline constexpr const char* kTemplateVersion = "reconstructed-v1";

// Bundled concrete-noun vocabulary (200+ names); includes the objects used
// by the worked example so it can serve as a golden fixture.
const std::vector<std::string>& default_vocab();

// 3x3 vertex grid described in snake order starting at the bottom-left
// corner: right, right, up, left, left, up, right, right.
struct LandmarkMap {
  std::vector<std::string> landmarks;  // 9 names in snake order
  Coord vertex_of(const std::string& name) const;     // row 0 = top
  const std::string& at(Coord vertex) const;
  static const std::vector<Coord>& snake_coords();
};

struct NLNavInstance {
  LandmarkMap map;
  std::string start_object;
  std::vector<Direction> instructions;  // one vertex step each
  std::string gold_object;
  std::string prompt_text;
};

struct RingMove {
  bool clockwise = true;
  int steps = 1;
};

struct RingNavInstance {
  std::vector<std::string> landmarks;  // ring_size names
  int ring_size = 12;
  int start_index = 0;
  std::vector<RingMove> moves;
  std::string gold_object;
  std::string prompt_text;
};

LandmarkMap generate_landmark_map(Rng& rng, const std::vector<std::string>& vocab);

// Random walk over the vertex grid; every step is drawn uniformly from the
// in-bounds directions, so walks never leave the grid.
NLNavInstance generate_walk(const LandmarkMap& map, Rng& rng, int walk_len);

// ((sum clockwise - sum counterclockwise) mod ring_size), in [0, ring_size).
int normalize_ring(const std::vector<RingMove>& moves, int ring_size);

RingNavInstance generate_ring(Rng& rng, const std::vector<std::string>& vocab,
                              int ring_size = 12);

// The fixed prompt wording with slot substitution.
std::string render_walk_prompt(const LandmarkMap& map, const std::string& start_object,
                               const std::vector<Direction>& instructions);
std::string render_ring_prompt(const RingNavInstance& inst);

// Test-friendly executor: applies instructions on the vertex grid.
Coord execute_walk(Coord start, const std::vector<Direction>& instructions);

}  // namespace speval::nlnav
