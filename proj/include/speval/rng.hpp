#pragma once

#include <cstdint>
#include <string_view>

namespace speval {

// Counter-based generator built on splitmix64. Every draw is a pure
// function of (seed, stream label, counter), so datasets are reproducible
// across platforms and independent of call order between streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view stream = "")
      : base_(mix(seed ^ fnv1a(stream))) {}

  // Derive an independent stream without touching this one's counter.
  Rng split(std::string_view label) const {
    Rng child = *this;
    child.base_ = mix(base_ ^ fnv1a(label));
    child.counter_ = 0;
    return child;
  }

  std::uint64_t next_u64() { return mix(base_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [0, n), n > 0. Modulo bias is negligible for the small
  // ranges used here and keeps the draw count fixed.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  int next_in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return (next_u64() & 1) != 0; }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace speval
