#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace psk {

/// The library-wide pseudo-random engine. Every sampling routine takes one by reference.
using Rng = std::mt19937_64;

/// Engine for independent substream `index` of master seed `seed`.
/// Parallel loops key their per-item streams this way so results do not depend on scheduling.
Rng make_substream(std::uint64_t seed, std::uint64_t index);

/// One standard normal draw.
double standard_normal(Rng& rng);

/// i.i.d. standard normals.
std::vector<double> sample_standard_normal(std::size_t count, Rng& rng);

}  // namespace psk
