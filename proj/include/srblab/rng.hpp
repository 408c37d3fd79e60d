#pragma once

#include <cstdint>
#include <vector>

#include "srblab/domain.hpp"

namespace srblab {

// Stateless counter-based uniforms: every draw is a pure function of
// (seed, counter), so sampling is reproducible and independent of execution
// order and thread count. The mixer is SplitMix64 over a Weyl sequence.
namespace rng {

std::uint64_t mix(std::uint64_t z);

inline std::uint64_t draw_u64(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

inline double to_unit(std::uint64_t u) {  // [0, 1)
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

inline double draw_unit(std::uint64_t seed, std::uint64_t counter) {
    return to_unit(draw_u64(seed, counter));
}

}  // namespace rng

// Uniform (normalized-Lebesgue) samples on a domain: sample index j uses
// counters j*dim .. j*dim + dim-1 of the master seed.
Point lebesgue_point(const DomainDescriptor& domain, std::uint64_t seed, std::uint64_t index);
std::vector<Point> lebesgue_points(const DomainDescriptor& domain, std::uint64_t seed,
                                   std::size_t count);

}  // namespace srblab
