#pragma once

#include <cstdint>

namespace fpp {

// splitmix64 finalizer; bijective on 64-bit values.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Edge hash that is a pure function of (seed, {u, v}): endpoints are sorted
// first, so both orientations of an edge hash identically.
constexpr uint64_t edge_hash(uint64_t seed, uint64_t u, uint64_t v) {
  const uint64_t a = u < v ? u : v;
  const uint64_t b = u < v ? v : u;
  uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  return mix64(h ^ b);
}

}  // namespace fpp
