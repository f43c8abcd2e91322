#include "geoloop/words.hpp"

#include <sstream>

namespace geoloop {

namespace {

void check_same_manifold(const Word& u, const Word& v) {
    if (!u.manifold().same_as(v.manifold()))
        throw MismatchError("words live on different manifolds");
}

}  // namespace

const char* species_name(Species s) {
    switch (s) {
        case Species::Z: return "Z";
        case Species::ZBased: return "Z_based";
        case Species::X: return "X";
        case Species::G: return "G";
    }
    return "?";
}

Species species_from_name(const std::string& name) {
    if (name == "Z") return Species::Z;
    if (name == "Z_based") return Species::ZBased;
    if (name == "X") return Species::X;
    if (name == "G") return Species::G;
    throw ValidityError("unknown word species: " + name);
}

bool species_needs_basepoint(Species s) { return s == Species::ZBased || s == Species::G; }

Word::Word(ManifoldPtr manifold, std::vector<Point> points_head_first, Species species,
           std::optional<Point> basepoint)
    : manifold_(std::move(manifold)),
      points_(std::move(points_head_first)),
      species_(species),
      basepoint_(std::move(basepoint)) {
    if (!manifold_) throw Error("word requires a manifold");
    if (points_.empty()) throw ValidityError("a word needs at least one point");
    if (species_needs_basepoint(species_) && !basepoint_)
        throw ValidityError(std::string(species_name(species_)) + " words require a basepoint");
}

ValidationResult validate(const Word& w) {
    const auto& m = w.manifold();
    const auto& pts = w.points();
    for (const auto& p : pts) check_point(m, p);
    if (w.has_basepoint()) check_point(m, w.basepoint());

    // Pair (x_i, x_{i+1}) sits at storage positions (k-i, k-i-1); scanning
    // storage right to left reports the lowest failing tail-side index first.
    const std::size_t k = w.length();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& xi = pts[k - i];
        const Point& xi1 = pts[k - i - 1];
        if (!unique_minimal(m, xi, xi1)) {
            std::ostringstream os;
            os << "no unique minimal geodesic between points " << i << " and " << i + 1;
            return {false, i, os.str()};
        }
    }

    switch (w.species()) {
        case Species::Z: break;
        case Species::ZBased:
            if (!points_equal(m, w.tail(), w.basepoint()))
                return {false, 0, "tail does not equal the basepoint"};
            break;
        case Species::X:
            if (!points_equal(m, w.tail(), w.head()))
                return {false, 0, "head and tail differ on a free-loop word"};
            break;
        case Species::G:
            if (!points_equal(m, w.tail(), w.basepoint()))
                return {false, 0, "tail does not equal the basepoint"};
            if (!points_equal(m, w.head(), w.basepoint()))
                return {false, 0, "head does not equal the basepoint"};
            break;
    }
    return {};
}

void require_valid(const Word& w) {
    auto r = validate(w);
    if (!r.ok) throw ValidityError("invalid word: " + r.reason);
}

// ReducedWord has a private constructor; reduction goes through this shim.
struct ReductionAccess {
    static ReducedWord wrap(Word w) { return ReducedWord(std::move(w)); }
};

ReductionTrace reduce_with_trace(const Word& w) {
    require_valid(w);
    const auto& m = w.manifold();
    std::vector<Point> pts = w.points();
    std::vector<ReductionEvent> events;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const bool dup = p > 0 && points_equal(m, pts[p], pts[p - 1]);
            const bool backtrack =
                p > 0 && p + 1 < pts.size() && points_equal(m, pts[p - 1], pts[p + 1]);
            if (!dup && !backtrack) continue;
            double excursion = 0.0;
            if (!dup) excursion = 2.0 * distance(m, pts[p - 1], pts[p]);
            events.push_back({dup ? ReductionKind::Duplicate : ReductionKind::Backtrack, p,
                              excursion});
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(p));
            changed = true;
            break;
        }
    }

    Word reduced(w.manifold_ptr(), std::move(pts), w.species(),
                 w.has_basepoint() ? std::optional<Point>(w.basepoint()) : std::nullopt);
    return {ReductionAccess::wrap(std::move(reduced)), std::move(events)};
}

ReducedWord reduce(const Word& w) { return reduce_with_trace(w).reduced; }

ReducedWord reduce(const ReducedWord& w) { return w; }

bool class_equal(const Word& u, const Word& v) {
    check_same_manifold(u, v);
    if (u.species() != v.species())
        throw MismatchError("class comparison across word species");
    return class_equal(reduce(u), reduce(v));
}

bool class_equal(const ReducedWord& u, const ReducedWord& v) {
    if (!u.manifold().same_as(v.manifold()))
        throw MismatchError("words live on different manifolds");
    if (u.species() != v.species())
        throw MismatchError("class comparison across word species");
    if (u.points().size() != v.points().size()) return false;
    const auto& m = u.manifold();
    for (std::size_t i = 0; i < u.points().size(); ++i)
        if (!points_equal(m, u.points()[i], v.points()[i])) return false;
    return true;
}

const Point& project_pi(const Word& w) {
    require_valid(w);
    return w.head();
}

const Point& project_pi(const ReducedWord& w) { return w.head(); }

}  // namespace geoloop
