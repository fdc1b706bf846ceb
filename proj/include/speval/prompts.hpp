#pragma once

#include <string>

#include "speval/grid.hpp"
#include "speval/jsonl.hpp"

namespace speval::prompts {

inline constexpr const char* kCatalogVersion = "reconstructed-v1";

// Per-task instruction block that precedes the rendered input. Glyph
// references track the palette. Empty for the self-contained NL tasks.
std::string task_instruction(const std::string& task, const RenderPalette& p);

// Answer-extraction keywords for rule 2 (last line containing one of these).
std::vector<std::string> answer_keywords(const data::QAItem& item);

}  // namespace speval::prompts
