#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "speval/grid.hpp"
#include "speval/rng.hpp"

namespace speval::tiling {

enum class PieceType { I, T, L };
constexpr std::array<PieceType, 3> kPieceTypes = {PieceType::I, PieceType::T, PieceType::L};

std::string_view piece_name(PieceType t);
std::optional<PieceType> piece_from_name(std::string_view name);

// A rotation/reflection image of a piece, normalized so min row = min col = 0,
// cells sorted. Distinct variants after dedup: I has 2, T has 4, L has 8.
struct Variant {
  PieceType type = PieceType::I;
  int index = 0;
  std::vector<Coord> cells;
};

const std::vector<Variant>& variants_of(PieceType t);

struct Placement {
  PieceType type = PieceType::I;
  int slot = 0;           // piece-slot index in the multiset
  int variant_index = 0;
  Coord anchor{};         // lexicographically smallest covered cell
  std::vector<Coord> covered;  // sorted, |covered| = 4
};

// Exact-cover matrix: one identity column per piece slot followed by one
// column per region cell; one row per legal placement, 5 ones per row.
struct CoverMatrix {
  int num_slots = 0;
  std::vector<Coord> region;                // sorted; cell j maps to column num_slots + j
  std::vector<std::vector<int>> rows;       // sorted column indices
  std::vector<Placement> row_placements;    // parallel to rows
};

std::vector<Coord> rect_region(int width, int height);

CoverMatrix build_exact_cover_matrix(const std::vector<Coord>& region,
                                     const std::vector<PieceType>& slots);

// All exact covers via dancing links: each returned row set covers every
// column exactly once. Deterministic: the column with the fewest remaining
// rows is selected, ties by lowest index; rows tried top to bottom.
std::vector<std::vector<int>> solve_exact_cover(const CoverMatrix& m);

// CNF over one boolean per matrix row. Clauses: at-least-one per slot and
// per cell, pairwise at-most-one per slot, pairwise conflicts for
// overlapping placements of different slots. Literals are 1-based signed
// row indices.
struct SatEncoding {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

SatEncoding encode_sat(const CoverMatrix& m);

// DPLL-style enumeration of every model, decoded to sorted row sets.
// Exists as an independent backend for cross-validating solve_exact_cover.
std::vector<std::vector<int>> solve_sat_all(const SatEncoding& enc);

struct TilingConfiguration {
  std::vector<Placement> placements;  // ordered by slot
};

// Decodes solver row sets into configurations, keeping only the canonical
// encoding of each: among slots of equal piece type, the smaller slot index
// holds the lexicographically smaller anchor.
std::vector<TilingConfiguration> decode_solutions(const CoverMatrix& m,
                                                  const std::vector<std::vector<int>>& row_sets,
                                                  bool canonical_only = true);

// The standard instance: 5x4 rectangle, pieces {I, I, T, T, L}.
constexpr int kRectWidth = 5;
constexpr int kRectHeight = 4;
const std::vector<PieceType>& standard_slots();
std::vector<TilingConfiguration> enumerate_standard_configurations();

std::string render_configuration(const TilingConfiguration& cfg, int width, int height,
                                 const RenderPalette& p);
// Masked slots render as the blank glyph.
std::string render_masked(const TilingConfiguration& cfg, const std::vector<int>& masked_slots,
                          int width, int height, const RenderPalette& p);
std::string render_variant(const Variant& v, const RenderPalette& p);

struct TilingQAInstance {
  int config_index = 0;
  int mask_count = 0;
  std::vector<int> masked_slots;
  int query_slot = 0;
  PieceType query_type = PieceType::I;
  std::string rect_text;
  std::array<int, 2> offered_variants{};  // variant indices of query_type
  int gold_index = 0;                     // 0 or 1
};

// True iff some placement of `variant` inside `region` leaves a remainder
// exactly coverable by `other_pieces`. This is the completion-search oracle
// behind the uniqueness filter.
bool variant_completable(const std::vector<Coord>& region, const Variant& variant,
                         const std::vector<PieceType>& other_pieces);

// QA emission for one masked configuration: one instance per masked piece,
// offering the placed variant plus an rng-drawn distractor. Instances where
// both offered variants admit a completion are dropped (counted in
// *filtered when provided).
std::vector<TilingQAInstance> mask_and_emit_qa(const TilingConfiguration& cfg, int config_index,
                                               const std::vector<int>& masked_slots, Rng& rng,
                                               const RenderPalette& p, int* filtered = nullptr);

struct TilingDataset {
  std::vector<TilingConfiguration> configs;
  std::vector<TilingQAInstance> qa;
  int two_mask_count = 0;
  int three_mask_count = 0;
  int filtered = 0;
};

// Per configuration: draws `two_mask_per_config` 2-type masks and
// `three_mask_per_config` 3-type masks (duplicates within a configuration
// are skipped), then emits and filters QA instances.
TilingDataset generate_tiling_dataset(std::uint64_t seed, const RenderPalette& p,
                                      int two_mask_per_config = 12,
                                      int three_mask_per_config = 8);

}  // namespace speval::tiling
