#pragma once

#include <cstdint>

namespace pmvw {

/// Deterministic splitmix64 stream. All sampling in the workbench goes through
/// this type so that a fixed seed reproduces every run bit-for-bit on any
/// platform (std:: distributions are not portable across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

  /// Derives an independent deterministic stream; used to give each suite and
  /// each check its own generator so suite selection does not shift sampling.
  Rng fork(std::uint64_t salt) const {
    Rng child(state_ ^ (0x6a09e667f3bcc909ULL + salt * 0x9e3779b97f4a7c15ULL));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace pmvw
