#include "speval/nav.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace speval::nav {

namespace {

// Lattice point with up = +y; converted to grid rows only at render time.
struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

Point advance(Point p, Direction d) {
  switch (d) {
    case Direction::Up: return {p.x, p.y + 1};
    case Direction::Down: return {p.x, p.y - 1};
    case Direction::Left: return {p.x - 1, p.y};
    case Direction::Right: return {p.x + 1, p.y};
  }
  return p;
}

// Walks the plan from the origin; returns the index of the first segment
// whose point lands on or orthogonally next to a non-consecutive visited
// point, or -1 and the full point trace. Forbidding adjacency (not just
// revisits) is what keeps the rendered road a unique simple path: a fold
// that touches itself would open a shortcut through road cells.
int walk(const std::vector<Direction>& dirs, const std::vector<int>& dist,
         std::vector<Point>& trace) {
  trace.clear();
  trace.push_back({0, 0});
  for (size_t i = 0; i < dirs.size(); ++i) {
    Point p = trace.back();
    for (int u = 0; u < dist[i]; ++u) {
      p = advance(p, dirs[i]);
      for (size_t j = 0; j + 1 < trace.size(); ++j) {
        int md = std::abs(p.x - trace[j].x) + std::abs(p.y - trace[j].y);
        if (md <= 1) return static_cast<int>(i);
      }
      trace.push_back(p);
    }
  }
  return -1;
}

}  // namespace

std::vector<std::vector<Direction>> enumerate_direction_sequences(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  static constexpr Direction kFirst[] = {Direction::Up, Direction::Down, Direction::Left,
                                         Direction::Right};
  std::vector<std::vector<Direction>> out;
  out.reserve(static_cast<size_t>(1) << (k + 1));
  std::vector<Direction> seq;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == k) {
      out.push_back(seq);
      return;
    }
    const bool vertical = is_vertical(seq.back());
    const Direction next[2] = {vertical ? Direction::Left : Direction::Up,
                               vertical ? Direction::Right : Direction::Down};
    for (Direction d : next) {
      seq.push_back(d);
      self(self);
      seq.pop_back();
    }
  };
  for (Direction d : kFirst) {
    seq.assign(1, d);
    rec(rec);
  }
  return out;
}

std::optional<InstructionPlan> simulate_plan(std::span<const Direction> dirs) {
  const int k = static_cast<int>(dirs.size());
  for (int i = 1; i < k; ++i)
    if (is_vertical(dirs[i]) == is_vertical(dirs[i - 1]))
      throw std::invalid_argument("directions must alternate axes");

  std::vector<Direction> d(dirs.begin(), dirs.end());
  std::vector<int> dist(dirs.size(), 1);
  std::vector<Point> trace;
  int increments = 0;
  while (true) {
    int collide = walk(d, dist, trace);
    if (collide < 0) break;
    if (collide == 0 || increments >= 2 * k - 3) return std::nullopt;  // early quit
    ++dist[collide - 1];
    ++increments;
  }
  return InstructionPlan{std::move(d), std::move(dist)};
}

NavMapRecord render_nav_map(const InstructionPlan& plan, int config_id) {
  std::vector<Point> trace;
  trace.push_back({0, 0});
  for (size_t i = 0; i < plan.directions.size(); ++i)
    for (int u = 0; u < plan.distances[i]; ++u)
      trace.push_back(advance(trace.back(), plan.directions[i]));

  int min_x = trace[0].x, max_x = trace[0].x, min_y = trace[0].y, max_y = trace[0].y;
  for (const Point& p : trace) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }

  NavMapRecord rec;
  rec.k = static_cast<int>(plan.directions.size());
  rec.plan = plan;
  rec.config_id = config_id;
  GridMap& m = rec.map;
  m.width = max_x - min_x + 1;
  m.height = max_y - min_y + 1;
  m.cells.assign(static_cast<size_t>(m.width) * m.height, CellKind::Obstacle);

  auto to_coord = [&](Point p) { return Coord{max_y - p.y, p.x - min_x}; };
  for (const Point& p : trace) {
    rec.path.push_back(to_coord(p));
    m.set(to_coord(p), CellKind::Road);
  }
  m.start = rec.path.front();
  m.dest = rec.path.back();
  m.set(m.start, CellKind::Start);
  m.set(m.dest, CellKind::Destination);
  return rec;
}

std::vector<NavQAInstance> emit_nav_qa(const NavMapRecord& rec, int map_index) {
  std::vector<NavQAInstance> out;
  NavQAInstance route{NavTask::RoutePlanning, map_index, rec.k, rec.config_id, {},
                      rec.plan.directions};
  out.push_back(std::move(route));
  for (int t = 1; t < rec.k; ++t) {
    NavQAInstance q;
    q.kind = NavTask::NextStep;
    q.map_index = map_index;
    q.k = rec.k;
    q.config_id = rec.config_id;
    q.given.assign(rec.plan.directions.begin(), rec.plan.directions.begin() + t);
    q.gold = {rec.plan.directions[t]};
    out.push_back(std::move(q));
  }
  return out;
}

NavDataset generate_nav_dataset(int k_min, int k_max) {
  if (k_min < 2 || k_max < k_min) throw std::invalid_argument("bad k range");
  NavDataset ds;
  ds.k_min = k_min;
  ds.k_max = k_max;
  for (int k = k_min; k <= k_max; ++k) {
    int kept = 0;
    auto seqs = enumerate_direction_sequences(k);
    for (size_t id = 0; id < seqs.size(); ++id) {
      auto plan = simulate_plan(seqs[id]);
      if (!plan) continue;
      int map_index = static_cast<int>(ds.maps.size());
      ds.maps.push_back(render_nav_map(*plan, static_cast<int>(id)));
      auto qa = emit_nav_qa(ds.maps.back(), map_index);
      ds.qa.insert(ds.qa.end(), qa.begin(), qa.end());
      ++kept;
    }
    ds.maps_per_k.push_back(kept);
  }
  return ds;
}

NavMapRecord reconstruct_record(const GridMap& map, int config_id) {
  NavMapRecord rec;
  rec.map = map;
  rec.config_id = config_id;
  rec.path.push_back(map.start);
  Coord prev{-1, -1};
  std::vector<Direction> unit_moves;
  while (rec.path.back() != map.dest) {
    Coord at = rec.path.back();
    bool moved = false;
    for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
      auto next = step(at, d);
      if (!next || !map.in_bounds(*next) || *next == prev) continue;
      CellKind kind = map.at(*next);
      if (kind != CellKind::Road && kind != CellKind::Destination) continue;
      unit_moves.push_back(d);
      prev = at;
      rec.path.push_back(*next);
      moved = true;
      break;
    }
    if (!moved) throw std::invalid_argument("map has no simple path from start to destination");
  }
  for (Direction d : unit_moves) {
    if (!rec.plan.directions.empty() && rec.plan.directions.back() == d) {
      ++rec.plan.distances.back();
    } else {
      rec.plan.directions.push_back(d);
      rec.plan.distances.push_back(1);
    }
  }
  rec.k = static_cast<int>(rec.plan.directions.size());
  return rec;
}

std::vector<Direction> expand_plan(const InstructionPlan& plan) {
  std::vector<Direction> out;
  for (size_t i = 0; i < plan.directions.size(); ++i)
    out.insert(out.end(), plan.distances[i], plan.directions[i]);
  return out;
}

}  // namespace speval::nav
