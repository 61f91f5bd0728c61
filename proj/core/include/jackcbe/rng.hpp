#pragma once

#include <cstdint>
#include <random>

namespace jackcbe {

using Rng = std::mt19937_64;

/// One step of SplitMix64; also used as a seed scrambler.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// An independent generator for stream `index` of a run seeded with `seed`.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform on [0, 1).
inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace jackcbe
