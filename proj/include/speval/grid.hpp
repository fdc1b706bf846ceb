#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace speval {

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

enum class Direction { Up, Down, Left, Right };

Direction opposite(Direction d);
bool is_vertical(Direction d);
std::string_view direction_name(Direction d);                 // "up", "down", ...
std::optional<Direction> direction_from_name(std::string_view word);  // accepts synonyms

// Adjacent coordinate in direction d, or nullopt if it would leave the
// nonnegative quadrant. Row 0 is the top rendered line, so "up" decreases row.
// Grid bounds are the caller's business.
std::optional<Coord> step(Coord c, Direction d);

enum class CellKind { Start, Destination, Road, Obstacle, Unknown };

struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<CellKind> cells;  // row-major, height*width
  Coord start{};
  Coord dest{};

  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
  }
  CellKind at(Coord c) const { return cells[static_cast<size_t>(c.row) * width + c.col]; }
  void set(Coord c, CellKind k) { cells[static_cast<size_t>(c.row) * width + c.col] = k; }

  bool operator==(const GridMap&) const = default;
};

// Glyphs are UTF-8 strings so an emoji palette is representable; the default
// is ASCII to keep fixtures diffable.
struct RenderPalette {
  std::string id = "ascii";
  std::string start = "S";
  std::string dest = "D";
  std::string road = ".";
  std::string obstacle = "#";
  std::vector<std::string> piece = {"I", "T", "L"};  // per piece type, tiling
  std::string blank = "_";                            // masked cell, tiling

  const std::string& glyph(CellKind k) const;
};

RenderPalette ascii_palette();
RenderPalette emoji_palette();

struct ParseError : std::runtime_error {
  enum class Kind { Empty, Ragged };
  Kind kind;
  ParseError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// One line per row, one glyph per cell, rows joined by '\n', no trailing
// whitespace. Deterministic for a fixed palette.
std::string render_grid(const GridMap& m, const RenderPalette& p);

struct ParsedGrid {
  GridMap map;                       // unknown glyphs become CellKind::Unknown
  std::vector<Coord> unknown_cells;  // where they were, in reading order
  std::vector<std::string> unknown_glyphs;  // parallel to unknown_cells
};

// Inverse of render_grid. Unknown glyphs are retained (not errors) so
// compliance grading can penalize them rather than crash. Throws ParseError
// on empty input or ragged lines.
ParsedGrid parse_grid(std::string_view text, const RenderPalette& p);

// Splits a UTF-8 string into codepoint-sized chunks. Malformed bytes are
// passed through one byte at a time.
std::vector<std::string> utf8_codepoints(std::string_view s);

}  // namespace speval
