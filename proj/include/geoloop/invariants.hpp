#pragma once

#include <vector>

#include "geoloop/group.hpp"

namespace geoloop {

/// A covering transformation class: the translation lattice vector for flat
/// tori, a sign for the projective plane, trivial for simply-connected
/// manifolds.
class DeckElement {
public:
    enum class Kind { Trivial, Translation, Sign };

    static DeckElement trivial() { return DeckElement(Kind::Trivial); }
    static DeckElement translation(std::vector<long long> v);
    static DeckElement sign_element(int s);

    Kind kind() const { return kind_; }
    const std::vector<long long>& translation_vector() const;
    int sign() const;

    bool is_identity() const;
    DeckElement compose(const DeckElement& other) const;
    DeckElement inverted() const;

    friend bool operator==(const DeckElement&, const DeckElement&) = default;

private:
    explicit DeckElement(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<long long> vector_;
    int sign_ = 1;
};

/// Fundamental-group class of a based loop word, computed by lifting the
/// word through the explicit covering (R^n over the torus, the sphere over
/// the projective plane). Trivial on Euclidean space, the hyperbolic disk,
/// and spheres of dimension >= 2; UnsupportedError elsewhere.
DeckElement pi1_class(const GroupElement& g);

/// Deck element carrying the initial lift of the basepoint to the final lift
/// of a closed based word (one whose head returns to the basepoint). Agrees
/// with pi1_class on group elements.
DeckElement deck_element_of_path(const ReducedWord& z);

/// The conjugate a . g . a^-1, reduced.
GroupElement conjugate(const GroupElement& g, const GroupElement& a);

/// An ordered 2g-tuple of group elements over a shared manifold and
/// basepoint, feeding the genus-g commutator product.
struct SurfaceTuple {
    int genus;
    std::vector<GroupElement> elements;
};

SurfaceTuple make_surface_tuple(int genus, std::vector<GroupElement> elements);

/// a . b . a^-1 . b^-1, reduced.
GroupElement commutator(const GroupElement& a, const GroupElement& b);

/// [x1,x2] . [x3,x4] ... [x_{2g-1}, x_{2g}], reduced.
GroupElement commutator_product(const SurfaceTuple& s);

/// True iff the commutator product is trivial in the fundamental group: the
/// computable obstruction for the tuple to bound a surface map.
bool is_surface_relator(const SurfaceTuple& s);

}  // namespace geoloop
