#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>

namespace agilesim::net {

/// Deterministic random source. The [0,1) mapping is done by hand from the
/// raw 64-bit stream so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), 53 significant bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-free parameter hashing for per-run seed derivation: a run's seed
/// depends on the parameter values, never on sweep enumeration order.
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ splitmix64(v));
}

inline std::uint64_t mix_seed(std::uint64_t h, std::string_view s) {
  std::uint64_t fnv = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) fnv = (fnv ^ c) * 0x100000001b3ULL;
  return mix_seed(h, fnv);
}

inline std::uint64_t mix_seed(std::uint64_t h, double d) {
  return mix_seed(h, std::bit_cast<std::uint64_t>(d));
}

}  // namespace agilesim::net
