// Deterministic seeded randomness (splitmix64). Every sampling routine in
// the toolkit draws from this generator only, so a fixed seed reproduces a
// run byte for byte.
#pragma once

#include <cstdint>

#include "spinver/field.hpp"

namespace spinver {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform element of a prime field; a small integer over the rationals.
  Scalar element(const Field& f) {
    if (f.is_prime()) return Scalar::from_fp(f, below(f.characteristic()));
    return Scalar::from_int(f, static_cast<long long>(below(41)) - 20);
  }

  Scalar nonzero_element(const Field& f) {
    for (;;) {
      Scalar s = element(f);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace spinver
