#pragma once

#include <cstdint>
#include <random>

namespace commacat {

/// Seeded generator. Draws use only the raw 64-bit engine output so the
/// sequence is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::uint32_t field_element(std::uint32_t p) { return static_cast<std::uint32_t>(below(p)); }
  /// Derives an independent child seed (splitmix64 step).
  std::uint64_t fork() {
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  }

 private:
  std::mt19937_64 engine_;
};

enum class ExecutionPolicy { serial, parallel };

}  // namespace commacat
