#include "speval/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace speval::tiling {

std::string_view piece_name(PieceType t) {
  switch (t) {
    case PieceType::I: return "I";
    case PieceType::T: return "T";
    case PieceType::L: return "L";
  }
  return "I";
}

std::optional<PieceType> piece_from_name(std::string_view name) {
  if (name == "I") return PieceType::I;
  if (name == "T") return PieceType::T;
  if (name == "L") return PieceType::L;
  return std::nullopt;
}

namespace {

std::vector<Coord> base_cells(PieceType t) {
  switch (t) {
    case PieceType::I: return {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    case PieceType::T: return {{0, 0}, {0, 1}, {0, 2}, {1, 1}};
    case PieceType::L: return {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
  }
  return {};
}

std::vector<Coord> normalize(std::vector<Coord> cells) {
  int min_r = cells[0].row, min_c = cells[0].col;
  for (const Coord& c : cells) {
    min_r = std::min(min_r, c.row);
    min_c = std::min(min_c, c.col);
  }
  for (Coord& c : cells) {
    c.row -= min_r;
    c.col -= min_c;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Coord> rotate90(const std::vector<Coord>& cells) {
  std::vector<Coord> out;
  out.reserve(cells.size());
  for (const Coord& c : cells) out.push_back({c.col, -c.row});
  return normalize(std::move(out));
}

std::vector<Coord> reflect(const std::vector<Coord>& cells) {
  std::vector<Coord> out;
  out.reserve(cells.size());
  for (const Coord& c : cells) out.push_back({c.row, -c.col});
  return normalize(std::move(out));
}

std::vector<Variant> compute_variants(PieceType t) {
  std::vector<Variant> out;
  std::set<std::vector<Coord>> seen;
  std::vector<Coord> shape = normalize(base_cells(t));
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<Coord> cur = refl ? reflect(shape) : shape;
    for (int rot = 0; rot < 4; ++rot) {
      if (seen.insert(cur).second)
        out.push_back({t, static_cast<int>(out.size()), cur});
      cur = rotate90(cur);
    }
  }
  return out;
}

}  // namespace

const std::vector<Variant>& variants_of(PieceType t) {
  static const std::vector<Variant> i = compute_variants(PieceType::I);
  static const std::vector<Variant> tt = compute_variants(PieceType::T);
  static const std::vector<Variant> l = compute_variants(PieceType::L);
  switch (t) {
    case PieceType::I: return i;
    case PieceType::T: return tt;
    case PieceType::L: return l;
  }
  return i;
}

std::vector<Coord> rect_region(int width, int height) {
  std::vector<Coord> out;
  out.reserve(static_cast<size_t>(width) * height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) out.push_back({r, c});
  return out;
}

CoverMatrix build_exact_cover_matrix(const std::vector<Coord>& region,
                                     const std::vector<PieceType>& slots) {
  CoverMatrix m;
  m.num_slots = static_cast<int>(slots.size());
  m.region = region;
  std::sort(m.region.begin(), m.region.end());
  std::map<Coord, int> cell_col;
  for (size_t j = 0; j < m.region.size(); ++j)
    cell_col[m.region[j]] = m.num_slots + static_cast<int>(j);
  const std::set<Coord> region_set(m.region.begin(), m.region.end());

  int min_r = 0, max_r = 0, min_c = 0, max_c = 0;
  if (!m.region.empty()) {
    min_r = max_r = m.region[0].row;
    min_c = max_c = m.region[0].col;
    for (const Coord& c : m.region) {
      min_r = std::min(min_r, c.row);
      max_r = std::max(max_r, c.row);
      min_c = std::min(min_c, c.col);
      max_c = std::max(max_c, c.col);
    }
  }

  for (int slot = 0; slot < m.num_slots; ++slot) {
    for (const Variant& v : variants_of(slots[slot])) {
      for (int r = min_r; r <= max_r; ++r) {
        for (int c = min_c; c <= max_c; ++c) {
          std::vector<Coord> covered;
          covered.reserve(4);
          bool fits = true;
          for (const Coord& cell : v.cells) {
            Coord at{r + cell.row, c + cell.col};
            if (!region_set.count(at)) {
              fits = false;
              break;
            }
            covered.push_back(at);
          }
          if (!fits) continue;
          std::sort(covered.begin(), covered.end());
          std::vector<int> cols{slot};
          for (const Coord& cell : covered) cols.push_back(cell_col.at(cell));
          m.rows.push_back(std::move(cols));
          m.row_placements.push_back(
              {slots[slot], slot, v.index, covered.front(), std::move(covered)});
        }
      }
    }
  }
  return m;
}

namespace {

// Toroidal doubly-linked node matrix per Knuth's Algorithm X.
struct Dlx {
  struct Node {
    int left, right, up, down;
    int col;   // column header index
    int row;   // matrix row index, -1 for headers
  };
  std::vector<Node> nodes;
  std::vector<int> col_size;
  int num_cols;

  explicit Dlx(const CoverMatrix& m) {
    num_cols = m.num_slots + static_cast<int>(m.region.size());
    nodes.reserve(1 + num_cols + m.rows.size() * 5);
    col_size.assign(num_cols, 0);
    // node 0 is the root; 1..num_cols are column headers
    for (int i = 0; i <= num_cols; ++i)
      nodes.push_back({i - 1, i + 1, i, i, i - 1, -1});
    nodes[0].left = num_cols;
    nodes[num_cols].right = 0;

    for (size_t ri = 0; ri < m.rows.size(); ++ri) {
      int first = -1;
      for (int col : m.rows[ri]) {
        int header = col + 1;
        int id = static_cast<int>(nodes.size());
        Node n{};
        n.col = col;
        n.row = static_cast<int>(ri);
        n.up = nodes[header].up;
        n.down = header;
        nodes[nodes[header].up].down = id;
        nodes[header].up = id;
        if (first < 0) {
          n.left = n.right = id;
          first = id;
        } else {
          n.left = nodes[first].left;
          n.right = first;
          nodes[nodes[first].left].right = id;
          nodes[first].left = id;
        }
        nodes.push_back(n);
        ++col_size[col];
      }
    }
  }

  void cover(int header) {
    nodes[nodes[header].right].left = nodes[header].left;
    nodes[nodes[header].left].right = nodes[header].right;
    for (int i = nodes[header].down; i != header; i = nodes[i].down) {
      for (int j = nodes[i].right; j != i; j = nodes[j].right) {
        nodes[nodes[j].down].up = nodes[j].up;
        nodes[nodes[j].up].down = nodes[j].down;
        --col_size[nodes[j].col];
      }
    }
  }

  void uncover(int header) {
    for (int i = nodes[header].up; i != header; i = nodes[i].up) {
      for (int j = nodes[i].left; j != i; j = nodes[j].left) {
        ++col_size[nodes[j].col];
        nodes[nodes[j].down].up = j;
        nodes[nodes[j].up].down = j;
      }
    }
    nodes[nodes[header].right].left = header;
    nodes[nodes[header].left].right = header;
  }

  void search(std::vector<int>& partial, std::vector<std::vector<int>>& solutions) {
    if (nodes[0].right == 0) {
      std::vector<int> sol = partial;
      std::sort(sol.begin(), sol.end());
      solutions.push_back(std::move(sol));
      return;
    }
    int best = -1;
    for (int h = nodes[0].right; h != 0; h = nodes[h].right)
      if (best < 0 || col_size[nodes[h].col] < col_size[nodes[best].col]) best = h;
    if (col_size[nodes[best].col] == 0) return;
    cover(best);
    for (int i = nodes[best].down; i != best; i = nodes[i].down) {
      partial.push_back(nodes[i].row);
      for (int j = nodes[i].right; j != i; j = nodes[j].right) cover(nodes[j].col + 1);
      search(partial, solutions);
      for (int j = nodes[i].left; j != i; j = nodes[j].left) uncover(nodes[j].col + 1);
      partial.pop_back();
    }
    uncover(best);
  }
};

}  // namespace

std::vector<std::vector<int>> solve_exact_cover(const CoverMatrix& m) {
  Dlx dlx(m);
  std::vector<std::vector<int>> solutions;
  std::vector<int> partial;
  dlx.search(partial, solutions);
  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

SatEncoding encode_sat(const CoverMatrix& m) {
  SatEncoding enc;
  enc.num_vars = static_cast<int>(m.rows.size());
  const int num_cols = m.num_slots + static_cast<int>(m.region.size());

  std::vector<std::vector<int>> rows_of_col(num_cols);
  for (size_t ri = 0; ri < m.rows.size(); ++ri)
    for (int col : m.rows[ri]) rows_of_col[col].push_back(static_cast<int>(ri));

  // at-least-one per slot column and per cell column
  for (int col = 0; col < num_cols; ++col) {
    std::vector<int> clause;
    for (int ri : rows_of_col[col]) clause.push_back(ri + 1);
    enc.clauses.push_back(std::move(clause));
  }
  // pairwise at-most-one within each slot
  for (int slot = 0; slot < m.num_slots; ++slot) {
    const auto& rows = rows_of_col[slot];
    for (size_t a = 0; a < rows.size(); ++a)
      for (size_t b = a + 1; b < rows.size(); ++b)
        enc.clauses.push_back({-(rows[a] + 1), -(rows[b] + 1)});
  }
  // pairwise conflicts: overlapping placements of different slots
  for (size_t a = 0; a < m.rows.size(); ++a) {
    for (size_t b = a + 1; b < m.rows.size(); ++b) {
      if (m.row_placements[a].slot == m.row_placements[b].slot) continue;
      const auto& ca = m.row_placements[a].covered;
      const auto& cb = m.row_placements[b].covered;
      bool overlap = false;
      for (const Coord& c : ca)
        if (std::binary_search(cb.begin(), cb.end(), c)) {
          overlap = true;
          break;
        }
      if (overlap)
        enc.clauses.push_back({-static_cast<int>(a + 1), -static_cast<int>(b + 1)});
    }
  }
  return enc;
}

namespace {

struct DpllEnumerator {
  const SatEncoding& enc;
  std::vector<std::int8_t> assign;  // -1 unassigned, 0 false, 1 true
  std::vector<std::vector<int>>& models;

  DpllEnumerator(const SatEncoding& e, std::vector<std::vector<int>>& out)
      : enc(e), assign(e.num_vars, -1), models(out) {}

  // 1 satisfied, 0 conflicting, -1 undecided (sets *unit when one literal left)
  int clause_state(const std::vector<int>& clause, int* unit) const {
    int unassigned = 0, last = 0;
    for (int lit : clause) {
      std::int8_t a = assign[std::abs(lit) - 1];
      if (a < 0) {
        ++unassigned;
        last = lit;
      } else if ((lit > 0) == (a == 1)) {
        return 1;
      }
    }
    if (unassigned == 0) return 0;
    if (unassigned == 1 && unit) *unit = last;
    return -1;
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : enc.clauses) {
        int unit = 0;
        int st = clause_state(clause, &unit);
        if (st == 0) return false;
        if (st == -1 && unit != 0) {
          assign[std::abs(unit) - 1] = unit > 0 ? 1 : 0;
          trail.push_back(std::abs(unit) - 1);
          changed = true;
        }
      }
    }
    return true;
  }

  void record() {
    std::vector<int> trues;
    for (int v = 0; v < enc.num_vars; ++v)
      if (assign[v] == 1) trues.push_back(v);
    models.push_back(std::move(trues));
  }

  void search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return;
    }
    int branch = -1;
    for (const auto& clause : enc.clauses) {
      if (clause_state(clause, nullptr) == -1) {
        for (int lit : clause)
          if (assign[std::abs(lit) - 1] < 0) {
            branch = std::abs(lit) - 1;
            break;
          }
        break;
      }
    }
    if (branch < 0) {
      // every clause satisfied; the exactly-one structure leaves no free vars
      int free_var = -1;
      for (int v = 0; v < enc.num_vars && free_var < 0; ++v)
        if (assign[v] < 0) free_var = v;
      if (free_var < 0) {
        record();
      } else {
        // only the all-false completion can be a model here
        std::vector<int> forced;
        for (int v = 0; v < enc.num_vars; ++v)
          if (assign[v] < 0) {
            assign[v] = 0;
            forced.push_back(v);
          }
        record();
        undo(forced);
      }
      undo(trail);
      return;
    }
    for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
      assign[branch] = value;
      search();
      assign[branch] = -1;
    }
    undo(trail);
  }

  void undo(std::vector<int>& trail) {
    for (int v : trail) assign[v] = -1;
    trail.clear();
  }
};

}  // namespace

std::vector<std::vector<int>> solve_sat_all(const SatEncoding& enc) {
  std::vector<std::vector<int>> models;
  DpllEnumerator dpll(enc, models);
  dpll.search();
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  return models;
}

std::vector<TilingConfiguration> decode_solutions(const CoverMatrix& m,
                                                  const std::vector<std::vector<int>>& row_sets,
                                                  bool canonical_only) {
  std::vector<TilingConfiguration> out;
  for (const auto& rows : row_sets) {
    TilingConfiguration cfg;
    cfg.placements.resize(m.num_slots);
    for (int ri : rows) cfg.placements[m.row_placements[ri].slot] = m.row_placements[ri];
    if (canonical_only) {
      bool canonical = true;
      for (int s = 1; s < m.num_slots && canonical; ++s)
        if (cfg.placements[s].type == cfg.placements[s - 1].type &&
            !(cfg.placements[s - 1].anchor < cfg.placements[s].anchor))
          canonical = false;
      if (!canonical) continue;
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

const std::vector<PieceType>& standard_slots() {
  static const std::vector<PieceType> slots = {PieceType::I, PieceType::I, PieceType::T,
                                               PieceType::T, PieceType::L};
  return slots;
}

std::vector<TilingConfiguration> enumerate_standard_configurations() {
  auto m = build_exact_cover_matrix(rect_region(kRectWidth, kRectHeight), standard_slots());
  return decode_solutions(m, solve_exact_cover(m));
}

namespace {

const std::string& piece_glyph(PieceType t, const RenderPalette& p) {
  size_t idx = static_cast<size_t>(t);
  if (idx >= p.piece.size()) throw std::runtime_error("palette missing piece glyph");
  return p.piece[idx];
}

std::string render_cells(int width, int height,
                         const std::vector<std::pair<Coord, const std::string*>>& filled,
                         const RenderPalette& p) {
  std::vector<const std::string*> grid(static_cast<size_t>(width) * height, &p.blank);
  for (const auto& [at, glyph] : filled)
    grid[static_cast<size_t>(at.row) * width + at.col] = glyph;
  std::string out;
  for (int r = 0; r < height; ++r) {
    if (r > 0) out += '\n';
    for (int c = 0; c < width; ++c) out += *grid[static_cast<size_t>(r) * width + c];
  }
  return out;
}

}  // namespace

std::string render_configuration(const TilingConfiguration& cfg, int width, int height,
                                 const RenderPalette& p) {
  return render_masked(cfg, {}, width, height, p);
}

std::string render_masked(const TilingConfiguration& cfg, const std::vector<int>& masked_slots,
                          int width, int height, const RenderPalette& p) {
  std::vector<std::pair<Coord, const std::string*>> filled;
  for (const Placement& pl : cfg.placements) {
    if (std::find(masked_slots.begin(), masked_slots.end(), pl.slot) != masked_slots.end())
      continue;
    for (const Coord& c : pl.covered) filled.push_back({c, &piece_glyph(pl.type, p)});
  }
  return render_cells(width, height, filled, p);
}

std::string render_variant(const Variant& v, const RenderPalette& p) {
  int h = 0, w = 0;
  for (const Coord& c : v.cells) {
    h = std::max(h, c.row + 1);
    w = std::max(w, c.col + 1);
  }
  std::vector<std::pair<Coord, const std::string*>> filled;
  for (const Coord& c : v.cells) filled.push_back({c, &piece_glyph(v.type, p)});
  return render_cells(w, h, filled, p);
}

bool variant_completable(const std::vector<Coord>& region, const Variant& variant,
                         const std::vector<PieceType>& other_pieces) {
  std::vector<PieceType> slots;
  slots.push_back(variant.type);
  slots.insert(slots.end(), other_pieces.begin(), other_pieces.end());
  auto m = build_exact_cover_matrix(region, slots);
  for (const auto& rows : solve_exact_cover(m))
    for (int ri : rows)
      if (m.row_placements[ri].slot == 0 && m.row_placements[ri].variant_index == variant.index)
        return true;
  return false;
}

std::vector<TilingQAInstance> mask_and_emit_qa(const TilingConfiguration& cfg, int config_index,
                                               const std::vector<int>& masked_slots, Rng& rng,
                                               const RenderPalette& p, int* filtered) {
  std::vector<Coord> region;
  for (int slot : masked_slots)
    for (const Coord& c : cfg.placements[slot].covered) region.push_back(c);
  std::sort(region.begin(), region.end());

  std::vector<TilingQAInstance> out;
  for (int query_slot : masked_slots) {
    const Placement& gold_pl = cfg.placements[query_slot];
    std::vector<PieceType> others;
    for (int slot : masked_slots)
      if (slot != query_slot) others.push_back(cfg.placements[slot].type);

    const auto& vars = variants_of(gold_pl.type);
    std::vector<int> distractors;
    for (const Variant& v : vars)
      if (v.index != gold_pl.variant_index) distractors.push_back(v.index);
    // draw distractors in rng order until one fails the completion search
    for (size_t i = distractors.size(); i > 1; --i)
      std::swap(distractors[i - 1], distractors[rng.next_below(i)]);

    int chosen = -1;
    for (int cand : distractors) {
      if (!variant_completable(region, vars[cand], others)) {
        chosen = cand;
        break;
      }
    }
    if (chosen < 0) {  // every distractor also completes; drop
      if (filtered) ++*filtered;
      continue;
    }

    TilingQAInstance qa;
    qa.config_index = config_index;
    qa.mask_count = static_cast<int>(masked_slots.size());
    qa.masked_slots = masked_slots;
    qa.query_slot = query_slot;
    qa.query_type = gold_pl.type;
    qa.rect_text = render_masked(cfg, masked_slots, kRectWidth, kRectHeight, p);
    bool gold_first = rng.next_bool();
    qa.offered_variants = gold_first ? std::array<int, 2>{gold_pl.variant_index, chosen}
                                     : std::array<int, 2>{chosen, gold_pl.variant_index};
    qa.gold_index = gold_first ? 0 : 1;
    out.push_back(std::move(qa));
  }
  return out;
}

TilingDataset generate_tiling_dataset(std::uint64_t seed, const RenderPalette& p,
                                      int two_mask_per_config, int three_mask_per_config) {
  TilingDataset ds;
  ds.configs = enumerate_standard_configurations();

  for (size_t ci = 0; ci < ds.configs.size(); ++ci) {
    const TilingConfiguration& cfg = ds.configs[ci];
    Rng rng(seed ^ Rng::fnv1a("tiling"), std::to_string(ci));

    std::vector<std::vector<int>> slots_by_type(3);
    for (const Placement& pl : cfg.placements)
      slots_by_type[static_cast<size_t>(pl.type)].push_back(pl.slot);

    auto sample_mask = [&](const std::vector<PieceType>& types) {
      std::vector<int> mask;
      for (PieceType t : types) {
        const auto& slots = slots_by_type[static_cast<size_t>(t)];
        mask.push_back(slots[rng.next_below(slots.size())]);
      }
      std::sort(mask.begin(), mask.end());
      return mask;
    };

    static const std::vector<std::vector<PieceType>> kTypePairs = {
        {PieceType::I, PieceType::T}, {PieceType::I, PieceType::L}, {PieceType::T, PieceType::L}};

    std::set<std::vector<int>> seen;
    for (int n = 0; n < two_mask_per_config; ++n) {
      auto mask = sample_mask(kTypePairs[rng.next_below(kTypePairs.size())]);
      if (!seen.insert(mask).second) continue;
      auto qa = mask_and_emit_qa(cfg, static_cast<int>(ci), mask, rng, p, &ds.filtered);
      ds.two_mask_count += static_cast<int>(qa.size());
      ds.qa.insert(ds.qa.end(), qa.begin(), qa.end());
    }
    for (int n = 0; n < three_mask_per_config; ++n) {
      auto mask = sample_mask({PieceType::I, PieceType::T, PieceType::L});
      if (!seen.insert(mask).second) continue;
      auto qa = mask_and_emit_qa(cfg, static_cast<int>(ci), mask, rng, p, &ds.filtered);
      ds.three_mask_count += static_cast<int>(qa.size());
      ds.qa.insert(ds.qa.end(), qa.begin(), qa.end());
    }
  }
  return ds;
}

}  // namespace speval::tiling
