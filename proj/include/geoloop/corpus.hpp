#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "geoloop/group.hpp"

namespace geoloop {

// Seeded corpus generation. The generator is std::mt19937_64 with uniform
// doubles built from the top 53 bits of each draw, so corpora are identical
// across platforms and standard libraries for a fixed seed.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Random walk step bound: a conservative fraction of the scale below which
/// any hop keeps a unique minimal geodesic.
double walk_step_scale(const ManifoldSpec& m);

/// Random tangent at a point with metric norm in (0, max_norm].
Tangent random_tangent(const ManifoldSpec& m, const Point& at, double max_norm,
                       std::mt19937_64& rng);

/// Random point, used for test corpora (distribution is convenient, not
/// uniform in measure). Supported for the closed-form manifolds and the
/// named builtin charts.
Point random_point(const ManifoldSpec& m, std::mt19937_64& rng);

/// Seeded corpus of group elements: random walks from v0 closed back through
/// chain_word and reduced. Every output validates; the list is a pure
/// function of (manifold, v0, count, max_length, seed).
std::vector<GroupElement> random_group_elements(ManifoldPtr m, const Point& v0, int count,
                                                int max_length, std::uint64_t seed);

/// Closed torus word with a prescribed winding vector.
GroupElement torus_winding_element(ManifoldPtr m, const Point& v0,
                                   const std::vector<long long>& winding);

}  // namespace geoloop
