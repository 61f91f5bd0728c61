#include "jackcbe/rng.hpp"

#include <array>

namespace jackcbe {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
  std::array<std::uint64_t, 4> words{};
  for (auto& w : words) w = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(words[0]), static_cast<std::uint32_t>(words[0] >> 32),
                    static_cast<std::uint32_t>(words[1]), static_cast<std::uint32_t>(words[1] >> 32),
                    static_cast<std::uint32_t>(words[2]), static_cast<std::uint32_t>(words[2] >> 32),
                    static_cast<std::uint32_t>(words[3]), static_cast<std::uint32_t>(words[3] >> 32)};
  return Rng(seq);
}

}  // namespace jackcbe
