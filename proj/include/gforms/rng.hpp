#pragma once

#include <cstdint>

namespace gforms {

/// splitmix64: tiny deterministic generator with a portable stream.
/// Used instead of std::mt19937 + distributions so that seeded runs are
/// byte-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n). Rejection-free modular reduction is fine here:
  /// n is tiny compared to 2^64, bias is unobservable and determinism is what
  /// matters.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  /// Fork a derived stream; keeps instance generation independent per index.
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gforms
