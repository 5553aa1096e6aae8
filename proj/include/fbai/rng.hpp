#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fbai {

// Counter-based 64-bit generator (splitmix64). One instance per run; cheap to
// seed from a hashed (base_seed, run coordinates) tuple and fully portable, so
// replays are bitwise identical across platforms and thread schedules.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (cosine branch only, so the draw count per
  // call is fixed and sequences stay aligned regardless of caller history).
  double next_gaussian() {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log(u1) finite
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  static constexpr double two_pi = 6.283185307179586476925286766559;
  std::uint64_t state_;
};

// FNV-1a, used to fold strings (algorithm names, instance labels) into seeds.
inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace fbai
