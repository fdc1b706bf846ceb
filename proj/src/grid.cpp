#include "speval/grid.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace speval {

Direction opposite(Direction d) {
  switch (d) {
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
  }
  return Direction::Up;  // unreachable
}

bool is_vertical(Direction d) { return d == Direction::Up || d == Direction::Down; }

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Left: return "left";
    case Direction::Right: return "right";
  }
  return "up";
}

std::optional<Direction> direction_from_name(std::string_view word) {
  std::string w(word);
  std::transform(w.begin(), w.end(), w.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (w == "up" || w == "upward" || w == "upwards" || w == "north") return Direction::Up;
  if (w == "down" || w == "downward" || w == "downwards" || w == "south") return Direction::Down;
  if (w == "left" || w == "leftward" || w == "leftwards" || w == "west") return Direction::Left;
  if (w == "right" || w == "rightward" || w == "rightwards" || w == "east") return Direction::Right;
  return std::nullopt;
}

std::optional<Coord> step(Coord c, Direction d) {
  switch (d) {
    case Direction::Up:
      if (c.row == 0) return std::nullopt;
      return Coord{c.row - 1, c.col};
    case Direction::Down: return Coord{c.row + 1, c.col};
    case Direction::Left:
      if (c.col == 0) return std::nullopt;
      return Coord{c.row, c.col - 1};
    case Direction::Right: return Coord{c.row, c.col + 1};
  }
  return std::nullopt;
}

const std::string& RenderPalette::glyph(CellKind k) const {
  switch (k) {
    case CellKind::Start: return start;
    case CellKind::Destination: return dest;
    case CellKind::Road: return road;
    case CellKind::Obstacle: return obstacle;
    case CellKind::Unknown: break;
  }
  throw std::logic_error("no glyph for Unknown cell");
}

RenderPalette ascii_palette() { return RenderPalette{}; }

RenderPalette emoji_palette() {
  RenderPalette p;
  p.id = "emoji";
  p.start = "\U0001F3E0";     // house
  p.dest = "\U0001F3E2";      // office
  p.road = "\U00002B1C";      // white square
  p.obstacle = "\U0001F7E5";  // red square
  p.piece = {"\U0001F7E6", "\U0001F7E9", "\U0001F7E8"};  // blue, green, yellow
  p.blank = "\U00002B1C";
  return p;
}

std::string render_grid(const GridMap& m, const RenderPalette& p) {
  std::string out;
  for (int r = 0; r < m.height; ++r) {
    if (r > 0) out += '\n';
    for (int c = 0; c < m.width; ++c) out += p.glyph(m.at({r, c}));
  }
  return out;
}

std::vector<std::string> utf8_codepoints(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    size_t len = 1;
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    if (i + len > s.size()) len = 1;
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

ParsedGrid parse_grid(std::string_view text, const RenderPalette& p) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(ParseError::Kind::Empty, "empty grid text");

  ParsedGrid out;
  std::vector<std::vector<std::string>> rows;
  rows.reserve(lines.size());
  for (const auto& line : lines) rows.push_back(utf8_codepoints(line));
  size_t width = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != width) throw ParseError(ParseError::Kind::Ragged, "ragged grid lines");
  if (width == 0) throw ParseError(ParseError::Kind::Empty, "empty grid text");

  GridMap& m = out.map;
  m.height = static_cast<int>(rows.size());
  m.width = static_cast<int>(width);
  m.cells.assign(static_cast<size_t>(m.height) * m.width, CellKind::Obstacle);
  for (int r = 0; r < m.height; ++r) {
    for (int c = 0; c < m.width; ++c) {
      const std::string& g = rows[r][c];
      Coord at{r, c};
      if (g == p.start) {
        m.set(at, CellKind::Start);
        m.start = at;
      } else if (g == p.dest) {
        m.set(at, CellKind::Destination);
        m.dest = at;
      } else if (g == p.road) {
        m.set(at, CellKind::Road);
      } else if (g == p.obstacle) {
        m.set(at, CellKind::Obstacle);
      } else {
        m.set(at, CellKind::Unknown);
        out.unknown_cells.push_back(at);
        out.unknown_glyphs.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace speval
