#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "speval/grid.hpp"
#include "speval/nav.hpp"
#include "speval/nlnav.hpp"
#include "speval/tiling.hpp"

namespace speval::data {

// One evaluable question, task-agnostic view used by the runner and scorers.
// meta keeps the task's schema fields for reconstruction.
struct QAItem {
  std::string id;
  std::string task;  // route_planning | next_step | visual_tiling | nl_nav | ring_nav
  std::string input_text;
  std::string gold;  // answer text used for substring matching
  nlohmann::json meta;
};

// JSONL dataset schemas, one instance per line.
void write_nav_jsonl(std::ostream& out, const nav::NavDataset& ds, const RenderPalette& p);
void write_tiling_jsonl(std::ostream& out, const tiling::TilingDataset& ds,
                        const RenderPalette& p);
void write_nlnav_jsonl(std::ostream& out, std::span<const nlnav::NLNavInstance> instances,
                       std::uint64_t seed);
void write_ring_jsonl(std::ostream& out, std::span<const nlnav::RingNavInstance> instances,
                      std::uint64_t seed);

// Reads any of the dataset files back into runner items.
std::vector<QAItem> load_items(std::istream& in, const RenderPalette& p);

// In-memory equivalents of write-then-load, used by tests and gen.
std::vector<QAItem> nav_items(const nav::NavDataset& ds, const RenderPalette& p);
std::vector<QAItem> tiling_items(const tiling::TilingDataset& ds, const RenderPalette& p);
std::vector<QAItem> nlnav_items(std::span<const nlnav::NLNavInstance> instances,
                                std::uint64_t seed);
std::vector<QAItem> ring_items(std::span<const nlnav::RingNavInstance> instances,
                               std::uint64_t seed);

std::vector<std::string> direction_words(std::span<const Direction> dirs);

}  // namespace speval::data
