#ifndef DFRP_RNG_HPP
#define DFRP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace dfrp {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic sub-stream derivation, so one user seed drives perturbation,
// pivot sampling, generators, and retries independently.
inline uint64_t sub_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = seed;
  for (char c : tag) h = splitmix64(h ^ static_cast<uint64_t>(static_cast<unsigned char>(c)));
  return splitmix64(h);
}

inline uint64_t sub_seed(uint64_t seed, std::string_view tag, uint64_t index) {
  return splitmix64(sub_seed(seed, tag) ^ splitmix64(index));
}

using Rng = std::mt19937_64;

}  // namespace dfrp

#endif
