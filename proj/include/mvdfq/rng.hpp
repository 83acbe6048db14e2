#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mvdfq {

// splitmix64 (Steele/Lea/Flood). One 64-bit word of state, trivially portable,
// so splits and splits-of-splits reproduce bit-for-bit in any language.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53 mantissa bits
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0,n), multiply-shift (Lemire)
  std::uint64_t below(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // standard normal via Box-Muller; consumes exactly two draws
  double next_gauss() {
    double u1 = double((next_u64() >> 11) | 1ull) * 0x1.0p-53;  // (0,1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Fisher-Yates, draws below(i) for i = size..2
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::uint64_t state_;
};

// Deterministic sub-stream seed for (seed, tag, index): FNV-1a of the tag is
// folded into the seed, then two splitmix64 steps separate tag and index.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

}  // namespace mvdfq
