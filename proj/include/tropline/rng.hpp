#pragma once

#include <cstdint>

namespace tropline {

// splitmix64. Used for every seeded schedule and test generator so results
// are identical across platforms (std:: distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Mix extra words into a fresh stream (for per-pair schedules).
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
    return s.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace tropline
