#pragma once

#include <cstdint>
#include <random>

namespace matsuo {

/// Deterministic sampling source for randomized validation passes.
/// Same seed → same sample sequence on every platform (mt19937_64 is
/// bit-exact by standard), so reports quoting a seed are reproducible.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace matsuo
