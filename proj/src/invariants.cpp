#include "geoloop/invariants.hpp"

#include <cmath>
#include <sstream>

#include "geoloop/vec.hpp"

namespace geoloop {

namespace {

double wrap_half(double d) {
    double r = d - std::round(d);
    if (r >= 0.5) r -= 1.0;
    if (r < -0.5) r += 1.0;
    return r;
}

DeckElement torus_deck(const ReducedWord& z) {
    const auto& pts = z.points();
    const std::size_t n = pts.front().size();
    std::vector<double> disp(n, 0.0);
    // Traversal runs tail to head; each segment lifts to its minimal
    // displacement, so the accumulated displacement is the final lift offset.
    for (std::size_t s = pts.size(); s-- > 1;) {
        const Point& from = pts[s];
        const Point& to = pts[s - 1];
        for (std::size_t i = 0; i < n; ++i) disp[i] += wrap_half(to[i] - from[i]);
    }
    std::vector<long long> winding(n);
    for (std::size_t i = 0; i < n; ++i) {
        winding[i] = std::llround(disp[i]);
        if (std::abs(disp[i] - static_cast<double>(winding[i])) > 1e-6)
            throw Error("torus lift of a closed word did not land on the lattice");
    }
    return DeckElement::translation(std::move(winding));
}

DeckElement projective_deck(const ReducedWord& z) {
    const auto& pts = z.points();
    // Lift through the sphere: continue with whichever representative of the
    // next point sits on the same side as the current lift.
    std::vector<double> lift = pts.back().coords;
    const std::vector<double> initial = lift;
    for (std::size_t s = pts.size() - 1; s-- > 0;) {
        std::vector<double> rep = pts[s].coords;
        if (vec::dot(lift, rep) < 0.0) rep = vec::scale(rep, -1.0);
        lift = std::move(rep);
    }
    const double d = vec::dot(lift, initial);
    if (std::abs(d) < 0.5)
        throw Error("projective lift of a closed word did not return to the basepoint fiber");
    return DeckElement::sign_element(d > 0.0 ? 1 : -1);
}

DeckElement deck_of_closed(const ReducedWord& z) {
    const auto& m = z.manifold();
    switch (m.kind()) {
        case ManifoldKind::FlatTorus: return torus_deck(z);
        case ManifoldKind::ProjectivePlane: return projective_deck(z);
        case ManifoldKind::Euclidean:
        case ManifoldKind::HyperbolicDisk: return DeckElement::trivial();
        case ManifoldKind::Sphere:
            if (m.dim() >= 2) return DeckElement::trivial();
            throw UnsupportedError("fundamental-group classes are not implemented on the circle");
        case ManifoldKind::Chart:
            throw UnsupportedError(
                "fundamental-group classes are not implemented on chart manifolds");
    }
    throw Error("unreachable");
}

}  // namespace

DeckElement DeckElement::translation(std::vector<long long> v) {
    DeckElement d(Kind::Translation);
    d.vector_ = std::move(v);
    return d;
}

DeckElement DeckElement::sign_element(int s) {
    if (s != 1 && s != -1) throw Error("sign deck element must be +1 or -1");
    DeckElement d(Kind::Sign);
    d.sign_ = s;
    return d;
}

const std::vector<long long>& DeckElement::translation_vector() const {
    if (kind_ != Kind::Translation) throw Error("deck element carries no translation vector");
    return vector_;
}

int DeckElement::sign() const {
    if (kind_ != Kind::Sign) throw Error("deck element carries no sign");
    return sign_;
}

bool DeckElement::is_identity() const {
    switch (kind_) {
        case Kind::Trivial: return true;
        case Kind::Sign: return sign_ == 1;
        case Kind::Translation:
            for (long long c : vector_)
                if (c != 0) return false;
            return true;
    }
    return true;
}

DeckElement DeckElement::compose(const DeckElement& other) const {
    if (kind_ != other.kind_) throw MismatchError("composing deck elements of different kinds");
    switch (kind_) {
        case Kind::Trivial: return *this;
        case Kind::Sign: return sign_element(sign_ * other.sign_);
        case Kind::Translation: {
            if (vector_.size() != other.vector_.size())
                throw MismatchError("composing translations of different ranks");
            std::vector<long long> v = vector_;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.vector_[i];
            return translation(std::move(v));
        }
    }
    throw Error("unreachable");
}

DeckElement DeckElement::inverted() const {
    switch (kind_) {
        case Kind::Trivial:
        case Kind::Sign: return *this;
        case Kind::Translation: {
            std::vector<long long> v = vector_;
            for (auto& c : v) c = -c;
            return translation(std::move(v));
        }
    }
    throw Error("unreachable");
}

DeckElement pi1_class(const GroupElement& g) { return deck_of_closed(g.reduced()); }

DeckElement deck_element_of_path(const ReducedWord& z) {
    if (z.species() != Species::ZBased && z.species() != Species::G)
        throw ValidityError("deck elements are defined for based words");
    if (!points_equal(z.manifold(), z.head(), z.basepoint()))
        throw ValidityError("deck element requires the word to return to the basepoint fiber");
    return deck_of_closed(z);
}

GroupElement conjugate(const GroupElement& g, const GroupElement& a) {
    return mul(mul(a, g), inverse(a));
}

SurfaceTuple make_surface_tuple(int genus, std::vector<GroupElement> elements) {
    if (genus < 1) throw ValidityError("surface tuples need genus >= 1");
    if (elements.size() != static_cast<std::size_t>(2 * genus)) {
        std::ostringstream os;
        os << "genus " << genus << " tuple needs " << 2 * genus << " elements, got "
           << elements.size();
        throw ValidityError(os.str());
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (!elements[0].manifold().same_as(elements[i].manifold()))
            throw MismatchError("surface tuple mixes manifolds");
        if (!points_equal(elements[0].manifold(), elements[0].basepoint(),
                          elements[i].basepoint()))
            throw MismatchError("surface tuple mixes basepoints");
    }
    return SurfaceTuple{genus, std::move(elements)};
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
    return mul(mul(mul(a, b), inverse(a)), inverse(b));
}

GroupElement commutator_product(const SurfaceTuple& s) {
    GroupElement acc = identity_element(s.elements[0].manifold_ptr(), s.elements[0].basepoint());
    for (int i = 0; i < s.genus; ++i)
        acc = mul(acc, commutator(s.elements[2 * i], s.elements[2 * i + 1]));
    return acc;
}

bool is_surface_relator(const SurfaceTuple& s) {
    return pi1_class(commutator_product(s)).is_identity();
}

}  // namespace geoloop
