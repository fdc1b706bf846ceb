#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speval/grid.hpp"

namespace speval::nav {

// Directions alternate axis; every distance is at least 1.
struct InstructionPlan {
  std::vector<Direction> directions;
  std::vector<int> distances;
};

struct NavMapRecord {
  int k = 0;
  InstructionPlan plan;
  GridMap map;
  std::vector<Coord> path;  // every cell from start to dest, in walk order
  int config_id = 0;        // index in enumeration order, stable across runs
};

enum class NavTask { RoutePlanning, NextStep };

struct NavQAInstance {
  NavTask kind = NavTask::RoutePlanning;
  int map_index = 0;  // into the dataset's map list
  int k = 0;
  int config_id = 0;
  std::vector<Direction> given;  // length t for NextStep, empty for RoutePlanning
  std::vector<Direction> gold;   // full plan for RoutePlanning, one step for NextStep
};

// All axis-alternating direction sequences of length k, exactly 2^(k+1) of
// them. First direction cycles Up, Down, Left, Right; each later position
// takes the two perpendicular directions in Up/Down (after horizontal) or
// Left/Right (after vertical) order. The list index is the config_id.
std::vector<std::vector<Direction>> enumerate_direction_sequences(int k);

// Assign distances so the traced lattice points are pairwise distinct and
// never orthogonally adjacent to a non-consecutive point (which would open
// a shortcut through the rendered road). All distances start at 1; when a
// segment violates, the previous instruction's distance grows by 1 and the
// walk restarts. Early quit: at most 2k-3 increments total, else nullopt.
std::optional<InstructionPlan> simulate_plan(std::span<const Direction> dirs);

// Bounding-box render: traced points become start/road/destination, every
// other cell an obstacle.
NavMapRecord render_nav_map(const InstructionPlan& plan, int config_id);

// One route-planning instance plus k-1 next-step instances (t = 1..k-1).
std::vector<NavQAInstance> emit_nav_qa(const NavMapRecord& rec, int map_index);

struct NavDataset {
  std::vector<NavMapRecord> maps;
  std::vector<NavQAInstance> qa;
  std::vector<int> maps_per_k;  // indexed by k - k_min
  int k_min = 0;
  int k_max = 0;
};

NavDataset generate_nav_dataset(int k_min, int k_max);

// Unit expansion of a plan: each instruction repeated distance times.
std::vector<Direction> expand_plan(const InstructionPlan& plan);

// Rebuilds path and plan from a rendered map by following the unique simple
// path from start to destination. Lets scorers work from map text alone.
NavMapRecord reconstruct_record(const GridMap& map, int config_id = 0);

}  // namespace speval::nav
