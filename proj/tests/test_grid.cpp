#include <doctest.h>

#include "speval/grid.hpp"
#include "speval/rng.hpp"

using namespace speval;

namespace {

GridMap random_map(Rng& rng, int width, int height) {
  GridMap m;
  m.width = width;
  m.height = height;
  m.cells.assign(static_cast<size_t>(width) * height, CellKind::Obstacle);
  for (auto& c : m.cells) {
    switch (rng.next_below(3)) {
      case 0: c = CellKind::Road; break;
      case 1: c = CellKind::Obstacle; break;
      default: c = CellKind::Road; break;
    }
  }
  m.start = {rng.next_in(0, height - 1), rng.next_in(0, width - 1)};
  do {
    m.dest = {rng.next_in(0, height - 1), rng.next_in(0, width - 1)};
  } while (m.dest == m.start);
  m.set(m.start, CellKind::Start);
  m.set(m.dest, CellKind::Destination);
  return m;
}

}  // namespace

TEST_CASE("direction basics") {
  CHECK(opposite(Direction::Up) == Direction::Down);
  CHECK(opposite(Direction::Left) == Direction::Right);
  CHECK(is_vertical(Direction::Up));
  CHECK(is_vertical(Direction::Down));
  CHECK(!is_vertical(Direction::Left));
  CHECK(direction_name(Direction::Right) == "right");
  CHECK(direction_from_name("down") == Direction::Down);
  CHECK(direction_from_name("Upward") == Direction::Up);
  CHECK(direction_from_name("NORTH") == Direction::Up);
  CHECK(direction_from_name("banana") == std::nullopt);
}

TEST_CASE("step moves within the nonnegative quadrant; up decreases row") {
  Coord c{2, 3};
  CHECK(step(c, Direction::Up) == Coord{1, 3});
  CHECK(step(c, Direction::Down) == Coord{3, 3});
  CHECK(step(c, Direction::Left) == Coord{2, 2});
  CHECK(step(c, Direction::Right) == Coord{2, 4});
  CHECK(step({0, 0}, Direction::Up) == std::nullopt);
  CHECK(step({0, 0}, Direction::Left) == std::nullopt);
}

TEST_CASE("step is translation-consistent") {
  Rng rng(11, "grid-step");
  for (int i = 0; i < 200; ++i) {
    Coord c{rng.next_in(1, 50), rng.next_in(1, 50)};
    int dr = rng.next_in(0, 5), dc = rng.next_in(0, 5);
    for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
      auto a = step(c, d);
      auto b = step({c.row + dr, c.col + dc}, d);
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(b->row - a->row == dr);
      CHECK(b->col - a->col == dc);
    }
  }
}

TEST_CASE("render/parse round trip on random maps, both palettes") {
  Rng rng(3, "grid-roundtrip");
  for (const RenderPalette& p : {ascii_palette(), emoji_palette()}) {
    for (int i = 0; i < 50; ++i) {
      GridMap m = random_map(rng, rng.next_in(2, 9), rng.next_in(2, 9));
      std::string text = render_grid(m, p);
      ParsedGrid back = parse_grid(text, p);
      CHECK(back.map == m);
      CHECK(back.unknown_cells.empty());
      CHECK(render_grid(back.map, p) == text);
    }
  }
}

TEST_CASE("render is injective over distinct maps") {
  Rng rng(5, "grid-inj");
  RenderPalette p = ascii_palette();
  for (int i = 0; i < 30; ++i) {
    GridMap a = random_map(rng, 4, 4);
    GridMap b = random_map(rng, 4, 4);
    if (a == b) continue;
    CHECK(render_grid(a, p) != render_grid(b, p));
  }
}

TEST_CASE("parse rejects empty and ragged input") {
  RenderPalette p = ascii_palette();
  CHECK_THROWS_AS(parse_grid("", p), ParseError);
  CHECK_THROWS_AS(parse_grid("\n\n", p), ParseError);
  try {
    parse_grid("..\n...", p);
    FAIL("ragged input accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Ragged);
  }
  try {
    parse_grid("", p);
    FAIL("empty input accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Empty);
  }
}

TEST_CASE("unknown glyphs are retained, not errors") {
  RenderPalette p = ascii_palette();
  ParsedGrid g = parse_grid("S*\n#D", p);
  REQUIRE(g.unknown_cells.size() == 1);
  CHECK(g.unknown_cells[0] == Coord{0, 1});
  CHECK(g.unknown_glyphs[0] == "*");
  CHECK(g.map.at({0, 1}) == CellKind::Unknown);
  CHECK(g.map.start == Coord{0, 0});
  CHECK(g.map.dest == Coord{1, 1});
}

TEST_CASE("utf8_codepoints splits multibyte glyphs") {
  auto cps = utf8_codepoints("S\xF0\x9F\x8F\xA0#");
  REQUIRE(cps.size() == 3);
  CHECK(cps[0] == "S");
  CHECK(cps[1] == "\xF0\x9F\x8F\xA0");
  CHECK(cps[2] == "#");
}

TEST_CASE("emoji palette round trip uses multibyte glyphs") {
  RenderPalette p = emoji_palette();
  CHECK(p.start.size() > 1);
  GridMap m;
  m.width = 2;
  m.height = 1;
  m.cells = {CellKind::Start, CellKind::Destination};
  m.start = {0, 0};
  m.dest = {0, 1};
  std::string text = render_grid(m, p);
  CHECK(parse_grid(text, p).map == m);
}
