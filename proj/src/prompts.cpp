#include "speval/prompts.hpp"

#include <stdexcept>

namespace speval::prompts {

namespace {

std::string nav_legend(const RenderPalette& p) {
  return "You are given a grid map. \"" + p.start + "\" marks the starting point, \"" + p.dest +
         "\" marks the destination, \"" + p.road + "\" marks a road cell you can walk on, and \"" +
         p.obstacle +
         "\" marks an obstacle. You move one cell at a time in one of four directions: up, down, "
         "left, or right. You must stay on the map, walk only on road cells, and avoid obstacles.";
}

}  // namespace

std::string task_instruction(const std::string& task, const RenderPalette& p) {
  if (task == "route_planning")
    return nav_legend(p) +
           " Starting from \"" + p.start + "\", give the full sequence of moves that reaches \"" +
           p.dest + "\".";
  if (task == "next_step")
    return nav_legend(p) +
           " You have already made the moves listed after the map. What is the single next move? "
           "Answer with one of: up, down, left, right.";
  if (task == "visual_tiling")
    return "You are given a rectangle partially filled with tetromino pieces. \"" + p.piece[0] +
           "\" cells belong to I tetrominoes, \"" + p.piece[1] + "\" cells to T tetrominoes, \"" +
           p.piece[2] + "\" cells to L tetrominoes, and \"" + p.blank +
           "\" cells are still empty. The empty region must be completed with the missing "
           "pieces. Two candidate orientations of one missing piece are shown as Option 1 and "
           "Option 2; exactly one of them can be placed so the whole rectangle gets filled. "
           "Answer with \"Option 1\" or \"Option 2\".";
  if (task == "nl_nav" || task == "ring_nav") return "";
  throw std::invalid_argument("unknown task: " + task);
}

std::vector<std::string> answer_keywords(const data::QAItem& item) {
  if (item.task == "route_planning" || item.task == "next_step")
    return {"up", "down", "left", "right"};
  if (item.task == "visual_tiling") return {"option", "variant"};
  return {item.gold};
}

}  // namespace speval::prompts
