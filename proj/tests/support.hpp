#pragma once

// Shared helpers for the test suites: manifold shorthands, word builders,
// and an index-level reduction oracle that enumerates every deletion order
// independently of the library's reduce().

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "geoloop/group.hpp"
#include "geoloop/manifold.hpp"
#include "geoloop/words.hpp"

namespace testsupport {

using geoloop::ManifoldPtr;
using geoloop::ManifoldSpec;
using geoloop::Point;
using geoloop::Species;
using geoloop::Word;

inline ManifoldPtr sphere2() {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::sphere(2, 1.0));
}
inline ManifoldPtr torus(int n) {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::flat_torus(n));
}
inline ManifoldPtr euclid(int n) {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::euclidean(n));
}
inline ManifoldPtr hyper() {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::hyperbolic_disk());
}
inline ManifoldPtr projective() {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::projective_plane());
}
inline ManifoldPtr chart(const std::string& metric, int dim, double rho_u) {
    return std::make_shared<const ManifoldSpec>(ManifoldSpec::chart(dim, metric, rho_u));
}

inline Point unit3(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    return Point{x / n, y / n, z / n};
}

// A generic four-point configuration on the unit 2-sphere: no coincidences,
// no antipodal or orthogonal pairs.
inline std::vector<Point> generic_sphere_points() {
    return {unit3(1.0, 0.1, -0.2), unit3(-0.3, 1.0, 0.15), unit3(0.2, -0.4, 1.0),
            unit3(0.9, 0.8, -0.5)};
}

// ---------------------------------------------------------------------------
// Reduction oracle on index words. A word over an alphabet of distinct
// points is a vector of indices in head-first order. Position p is deletable
// when it repeats its left neighbor or its two neighbors coincide; the
// oracle explores every deletion order and collects the reachable
// irreducible words.

using IndexWord = std::vector<int>;

inline bool deletable(const IndexWord& w, std::size_t p) {
    const bool dup = p > 0 && w[p] == w[p - 1];
    const bool backtrack = p > 0 && p + 1 < w.size() && w[p - 1] == w[p + 1];
    return dup || backtrack;
}

inline const std::set<IndexWord>& all_normal_forms(const IndexWord& w,
                                                   std::map<IndexWord, std::set<IndexWord>>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::set<IndexWord> result;
    bool any = false;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (!deletable(w, p)) continue;
        any = true;
        IndexWord child = w;
        child.erase(child.begin() + static_cast<std::ptrdiff_t>(p));
        const auto& sub = all_normal_forms(child, memo);
        result.insert(sub.begin(), sub.end());
    }
    if (!any) result.insert(w);
    return memo.emplace(w, std::move(result)).first->second;
}

// Map the points of a reduced word back to alphabet indices (exact match).
inline IndexWord to_index_word(const std::vector<Point>& alphabet,
                               const std::vector<Point>& pts) {
    IndexWord out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        int found = -1;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == p) found = static_cast<int>(i);
        if (found < 0) throw std::runtime_error("point not in alphabet");
        out.push_back(found);
    }
    return out;
}

inline Word word_from_indices(const ManifoldPtr& m, const std::vector<Point>& alphabet,
                              const IndexWord& iw, Species species = Species::Z) {
    std::vector<Point> pts;
    pts.reserve(iw.size());
    for (int i : iw) pts.push_back(alphabet[static_cast<std::size_t>(i)]);
    std::optional<Point> basepoint;
    if (species_needs_basepoint(species)) basepoint = alphabet[0];
    return Word(m, std::move(pts), species, std::move(basepoint));
}

}  // namespace testsupport
