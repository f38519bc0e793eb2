#pragma once

#include <cstdint>
#include <random>

// Deterministic random-number plumbing. Every randomized routine in the
// library derives an independent mt19937_64 stream from (seed, stream index)
// via splitmix64 mixing, and converts raw 64-bit draws to doubles or bounded
// integers itself so results are identical across platforms and thread
// counts.
namespace cforge::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Collapses (seed, stream) into a single well-mixed 64-bit value.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s = h ^ (stream + 0x9e3779b97f4a7c15ull);
  return splitmix64(s);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(derive(seed, stream));
}

// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in [-amplitude, amplitude].
inline double uniform_symmetric(std::mt19937_64& gen, double amplitude) {
  return amplitude * (2.0 * uniform_unit(gen) - 1.0);
}

// Unbiased uniform integer in [0, bound); bound must be >= 1.
inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace cforge::rng
