#include "speval/jsonl.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace speval::data {

using nlohmann::json;

std::vector<std::string> direction_words(std::span<const Direction> dirs) {
  std::vector<std::string> out;
  out.reserve(dirs.size());
  for (Direction d : dirs) out.emplace_back(direction_name(d));
  return out;
}

namespace {

std::string join(const std::vector<std::string>& words, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

QAItem item_from_line(const json& line) {
  QAItem item;
  item.id = line.at("id").get<std::string>();
  item.meta = line;
  if (line.contains("task")) {
    item.task = line.at("task").get<std::string>();
  } else if (line.contains("variant")) {
    item.task = line.at("variant") == "ring" ? "ring_nav" : "nl_nav";
  } else {
    item.task = "visual_tiling";
  }

  if (item.task == "route_planning" || item.task == "next_step") {
    item.input_text = line.at("map_text").get<std::string>();
    auto given = line.at("given_instructions").get<std::vector<std::string>>();
    if (!given.empty()) item.input_text += "\n\nMoves so far: " + join(given, ", ");
    item.gold = join(line.at("gold").get<std::vector<std::string>>(), " ");
  } else if (item.task == "visual_tiling") {
    auto options = line.at("offered_variant_texts").get<std::vector<std::string>>();
    item.input_text = line.at("rect_text").get<std::string>() + "\n\nOption 1:\n" + options[0] +
                      "\n\nOption 2:\n" + options[1];
    item.gold = "option " + std::to_string(line.at("gold_index").get<int>() + 1);
  } else {
    item.input_text = line.at("prompt_text").get<std::string>();
    item.gold = line.at("gold_object").get<std::string>();
  }
  return item;
}

}  // namespace

namespace {

std::vector<json> nav_lines(const nav::NavDataset& ds, const RenderPalette& p) {
  std::vector<json> lines;
  for (const nav::NavQAInstance& qa : ds.qa) {
    const nav::NavMapRecord& rec = ds.maps[qa.map_index];
    json j;
    std::string base = "nav-k" + std::to_string(qa.k) + "-c" + std::to_string(qa.config_id);
    if (qa.kind == nav::NavTask::RoutePlanning) {
      j["id"] = base + "-route";
      j["task"] = "route_planning";
    } else {
      j["id"] = base + "-t" + std::to_string(qa.given.size());
      j["task"] = "next_step";
    }
    j["k"] = qa.k;
    j["config_id"] = qa.config_id;
    j["map_text"] = render_grid(rec.map, p);
    j["given_instructions"] = direction_words(qa.given);
    j["gold"] = direction_words(qa.gold);
    j["palette_id"] = p.id;
    lines.push_back(std::move(j));
  }
  return lines;
}

std::vector<json> tiling_lines(const tiling::TilingDataset& ds, const RenderPalette& p) {
  std::vector<json> lines;
  for (size_t n = 0; n < ds.qa.size(); ++n) {
    const tiling::TilingQAInstance& qa = ds.qa[n];
    json j;
    std::string slots;
    for (int s : qa.masked_slots) slots += std::to_string(s);
    j["id"] = "tiling-" + std::to_string(qa.config_index) + "-m" + slots + "-q" +
              std::to_string(qa.query_slot);
    j["task"] = "visual_tiling";
    j["mask_count"] = qa.mask_count;
    j["rect_text"] = qa.rect_text;
    j["query_piece"] = std::string(tiling::piece_name(qa.query_type));
    const auto& variants = tiling::variants_of(qa.query_type);
    j["offered_variant_texts"] = {tiling::render_variant(variants[qa.offered_variants[0]], p),
                                  tiling::render_variant(variants[qa.offered_variants[1]], p)};
    j["gold_index"] = qa.gold_index;
    j["config_id"] = qa.config_index;
    const auto& gold_pl = ds.configs[qa.config_index].placements[qa.query_slot];
    json cells = json::array();
    for (const Coord& c : gold_pl.covered) cells.push_back({c.row, c.col});
    j["gold_cells"] = std::move(cells);
    lines.push_back(std::move(j));
  }
  return lines;
}

std::vector<json> nlnav_lines(std::span<const nlnav::NLNavInstance> instances,
                              std::uint64_t seed) {
  std::vector<json> lines;
  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    json j;
    j["id"] = "nlnav-" + std::to_string(i);
    j["variant"] = "square";
    j["prompt_text"] = inst.prompt_text;
    j["gold_object"] = inst.gold_object;
    j["seed"] = seed;
    j["template_version"] = nlnav::kTemplateVersion;
    j["steps"] = inst.instructions.size();
    lines.push_back(std::move(j));
  }
  return lines;
}

std::vector<json> ring_lines(std::span<const nlnav::RingNavInstance> instances,
                             std::uint64_t seed) {
  std::vector<json> lines;
  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    json j;
    j["id"] = "ring-" + std::to_string(i);
    j["variant"] = "ring";
    j["prompt_text"] = inst.prompt_text;
    j["gold_object"] = inst.gold_object;
    j["seed"] = seed;
    j["template_version"] = nlnav::kTemplateVersion;
    j["steps"] = inst.moves.size();
    lines.push_back(std::move(j));
  }
  return lines;
}

void write_lines(std::ostream& out, const std::vector<json>& lines) {
  for (const json& j : lines) out << j.dump() << '\n';
}

std::vector<QAItem> items_from_lines(const std::vector<json>& lines) {
  std::vector<QAItem> items;
  items.reserve(lines.size());
  for (const json& j : lines) items.push_back(item_from_line(j));
  return items;
}

}  // namespace

void write_nav_jsonl(std::ostream& out, const nav::NavDataset& ds, const RenderPalette& p) {
  write_lines(out, nav_lines(ds, p));
}
void write_tiling_jsonl(std::ostream& out, const tiling::TilingDataset& ds,
                        const RenderPalette& p) {
  write_lines(out, tiling_lines(ds, p));
}
void write_nlnav_jsonl(std::ostream& out, std::span<const nlnav::NLNavInstance> instances,
                       std::uint64_t seed) {
  write_lines(out, nlnav_lines(instances, seed));
}
void write_ring_jsonl(std::ostream& out, std::span<const nlnav::RingNavInstance> instances,
                      std::uint64_t seed) {
  write_lines(out, ring_lines(instances, seed));
}

std::vector<QAItem> load_items(std::istream& in, const RenderPalette&) {
  std::vector<QAItem> items;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    items.push_back(item_from_line(json::parse(line)));
  }
  return items;
}

std::vector<QAItem> nav_items(const nav::NavDataset& ds, const RenderPalette& p) {
  return items_from_lines(nav_lines(ds, p));
}
std::vector<QAItem> tiling_items(const tiling::TilingDataset& ds, const RenderPalette& p) {
  return items_from_lines(tiling_lines(ds, p));
}
std::vector<QAItem> nlnav_items(std::span<const nlnav::NLNavInstance> instances,
                                std::uint64_t seed) {
  return items_from_lines(nlnav_lines(instances, seed));
}
std::vector<QAItem> ring_items(std::span<const nlnav::RingNavInstance> instances,
                               std::uint64_t seed) {
  return items_from_lines(ring_lines(instances, seed));
}

}  // namespace speval::data
