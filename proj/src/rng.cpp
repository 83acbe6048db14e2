#include "mvdfq/rng.hpp"

namespace mvdfq {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  Rng by_tag(seed ^ h);
  Rng by_index(by_tag.next_u64() ^ index);
  return by_index.next_u64();
}

}  // namespace mvdfq
