#include "speval/nlnav.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace speval::nlnav {

namespace {

std::string with_article(const std::string& noun) {
  if (noun.empty()) return noun;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(noun[0])));
  bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + noun;
}

}  // namespace

const std::vector<Coord>& LandmarkMap::snake_coords() {
  // bottom-left start, then right, right, up, left, left, up, right, right
  static const std::vector<Coord> coords = {{2, 0}, {2, 1}, {2, 2}, {1, 2}, {1, 1},
                                            {1, 0}, {0, 0}, {0, 1}, {0, 2}};
  return coords;
}

Coord LandmarkMap::vertex_of(const std::string& name) const {
  for (size_t i = 0; i < landmarks.size(); ++i)
    if (landmarks[i] == name) return snake_coords()[i];
  throw std::invalid_argument("unknown landmark: " + name);
}

const std::string& LandmarkMap::at(Coord vertex) const {
  const auto& coords = snake_coords();
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == vertex) return landmarks[i];
  throw std::invalid_argument("vertex outside 3x3 grid");
}

LandmarkMap generate_landmark_map(Rng& rng, const std::vector<std::string>& vocab) {
  if (vocab.size() < 9) throw std::invalid_argument("vocabulary must hold at least 9 names");
  std::vector<size_t> idx(vocab.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  LandmarkMap map;
  for (int i = 0; i < 9; ++i) {
    size_t pick = i + rng.next_below(idx.size() - i);
    std::swap(idx[i], idx[pick]);
    map.landmarks.push_back(vocab[idx[i]]);
  }
  return map;
}

Coord execute_walk(Coord start, const std::vector<Direction>& instructions) {
  Coord at = start;
  for (Direction d : instructions) {
    auto next = step(at, d);
    if (!next || next->row > 2 || next->col > 2)
      throw std::invalid_argument("walk leaves the 3x3 vertex grid");
    at = *next;
  }
  return at;
}

NLNavInstance generate_walk(const LandmarkMap& map, Rng& rng, int walk_len) {
  if (walk_len < 1) throw std::invalid_argument("walk_len must be >= 1");
  NLNavInstance inst;
  inst.map = map;
  inst.start_object = map.landmarks[rng.next_below(9)];
  Coord at = map.vertex_of(inst.start_object);
  for (int i = 0; i < walk_len; ++i) {
    std::vector<Direction> options;
    for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
      auto next = step(at, d);
      if (next && next->row <= 2 && next->col <= 2) options.push_back(d);
    }
    Direction d = options[rng.next_below(options.size())];
    inst.instructions.push_back(d);
    at = *step(at, d);
  }
  inst.gold_object = map.at(at);
  inst.prompt_text = render_walk_prompt(map, inst.start_object, inst.instructions);
  return inst;
}

std::string render_walk_prompt(const LandmarkMap& map, const std::string& start_object,
                               const std::vector<Direction>& instructions) {
  // Snake-order narration: moves between consecutive snake vertices.
  static const char* kSnakeMoves[] = {"right", "right", "up", "left",
                                      "left",  "up",    "right", "right"};
  std::string out =
      "You have been given a 3 by 3 square grid. Starting from a vertex, you will move "
      "along the edges of the grid. Initially, you are positioned at the bottom-left "
      "corner of the grid, where you will find " +
      with_article(map.landmarks[0]);
  for (int i = 0; i < 8; ++i) {
    // New sentence whenever the narrated direction turns upward.
    bool new_sentence = std::string(kSnakeMoves[i]) == "up";
    out += new_sentence ? ". Then you go " : ", then you go ";
    out += kSnakeMoves[i];
    out += ", where you will find " + with_article(map.landmarks[i + 1]);
  }
  out += ". Now you have all the information on the map. You start at the position where the " +
         start_object + " is located";
  for (size_t i = 0; i < instructions.size(); ++i) {
    out += (i + 1 == instructions.size()) ? ", and then you go " : ", then you go ";
    out += direction_name(instructions[i]);
    out += " by one step";
  }
  out += ". What will you find?";
  return out;
}

int normalize_ring(const std::vector<RingMove>& moves, int ring_size) {
  long long sum = 0;
  for (const RingMove& m : moves) sum += m.clockwise ? m.steps : -m.steps;
  long long r = sum % ring_size;
  if (r < 0) r += ring_size;
  return static_cast<int>(r);
}

std::string render_ring_prompt(const RingNavInstance& inst) {
  std::string out = "You are standing on a circular path with " +
                    std::to_string(inst.ring_size) +
                    " positions arranged in a ring. Walking clockwise from your position, the "
                    "positions hold the following objects in order: ";
  for (int i = 0; i < inst.ring_size; ++i) {
    int idx = (inst.start_index + i) % inst.ring_size;
    if (i > 0) out += (i + 1 == inst.ring_size) ? ", and " : ", ";
    out += with_article(inst.landmarks[idx]);
  }
  out += ". You start at the position where the " + inst.landmarks[inst.start_index] +
         " is located";
  for (size_t i = 0; i < inst.moves.size(); ++i) {
    out += (i + 1 == inst.moves.size() && inst.moves.size() > 1) ? ", and then you move "
                                                                 : ", then you move ";
    out += std::to_string(inst.moves[i].steps);
    out += inst.moves[i].steps == 1 ? " step " : " steps ";
    out += inst.moves[i].clockwise ? "clockwise" : "counterclockwise";
  }
  out += ". What will you find?";
  return out;
}

RingNavInstance generate_ring(Rng& rng, const std::vector<std::string>& vocab, int ring_size) {
  if (static_cast<int>(vocab.size()) < ring_size)
    throw std::invalid_argument("vocabulary smaller than ring size");
  RingNavInstance inst;
  inst.ring_size = ring_size;
  std::vector<size_t> idx(vocab.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (int i = 0; i < ring_size; ++i) {
    size_t pick = i + rng.next_below(idx.size() - i);
    std::swap(idx[i], idx[pick]);
    inst.landmarks.push_back(vocab[idx[i]]);
  }
  inst.start_index = static_cast<int>(rng.next_below(ring_size));
  int move_count = rng.next_in(1, 3);
  for (int i = 0; i < move_count; ++i)
    inst.moves.push_back({rng.next_bool(), rng.next_in(1, 15)});
  int gold = (inst.start_index + normalize_ring(inst.moves, ring_size)) % ring_size;
  inst.gold_object = inst.landmarks[gold];
  inst.prompt_text = render_ring_prompt(inst);
  return inst;
}

}  // namespace speval::nlnav
