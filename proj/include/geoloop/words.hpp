#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoloop/manifold.hpp"

namespace geoloop {

/// Which subspace constraints a word carries:
///   Z       no endpoint constraint
///   ZBased  tail x_0 equals the basepoint (based paths)
///   X       head equals tail (free loops)
///   G       head and tail both equal the basepoint (based loops)
enum class Species { Z, ZBased, X, G };

const char* species_name(Species s);
Species species_from_name(const std::string& name);
bool species_needs_basepoint(Species s);

/// A geodesic word: an ordered tuple of manifold points stored head first,
/// so points()[0] is the head x_k and points().back() is the tail x_0.
/// Consecutive points must be joined by a unique minimal geodesic (checked
/// by validate(), not by the constructor). Words are immutable values.
class Word {
public:
    Word(ManifoldPtr manifold, std::vector<Point> points_head_first, Species species,
         std::optional<Point> basepoint = std::nullopt);

    const ManifoldPtr& manifold_ptr() const { return manifold_; }
    const ManifoldSpec& manifold() const { return *manifold_; }
    const std::vector<Point>& points() const { return points_; }
    Species species() const { return species_; }
    bool has_basepoint() const { return basepoint_.has_value(); }
    const Point& basepoint() const { return *basepoint_; }

    /// Number of geodesic segments; a single-point word has length 0.
    std::size_t length() const { return points_.size() - 1; }
    const Point& head() const { return points_.front(); }
    const Point& tail() const { return points_.back(); }

private:
    ManifoldPtr manifold_;
    std::vector<Point> points_;
    Species species_;
    std::optional<Point> basepoint_;
};

struct ValidationResult {
    bool ok = true;
    // Index i of the first failing consecutive pair (x_i, x_{i+1}), counted
    // from the tail end, or the failing species constraint description.
    std::size_t pair_index = 0;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Check unique-minimal-geodesic validity of every consecutive pair plus the
/// species constraints. Point representations are checked as a side effect;
/// malformed points surface as RepresentationError.
ValidationResult validate(const Word& w);

/// validate() or throw ValidityError.
void require_valid(const Word& w);

/// A word in normal form: no point equals its successor and no point's two
/// neighbors coincide. Only obtainable through reduce().
class ReducedWord {
public:
    const Word& word() const { return word_; }
    const ManifoldPtr& manifold_ptr() const { return word_.manifold_ptr(); }
    const ManifoldSpec& manifold() const { return word_.manifold(); }
    const std::vector<Point>& points() const { return word_.points(); }
    Species species() const { return word_.species(); }
    const Point& basepoint() const { return word_.basepoint(); }
    std::size_t length() const { return word_.length(); }
    const Point& head() const { return word_.head(); }
    const Point& tail() const { return word_.tail(); }

private:
    explicit ReducedWord(Word w) : word_(std::move(w)) {}
    friend struct ReductionAccess;

    Word word_;
};

enum class ReductionKind {
    Duplicate,  // deleted a point equal to its neighbor (zero-length segment)
    Backtrack,  // deleted the middle of a there-and-back excursion
};

struct ReductionEvent {
    ReductionKind kind;
    std::size_t position;      // head-first storage index of the deleted point
    double excursion_length;   // arc length removed from the realization
};

struct ReductionTrace {
    ReducedWord reduced;
    std::vector<ReductionEvent> events;
};

/// Leftmost-first repeated deletion until no rule applies. Deletions scan the
/// head-first storage order; position p is deletable when it equals the point
/// at p-1 (duplicate) or when the points at p-1 and p+1 coincide (backtrack).
/// Endpoint values are preserved. Throws ValidityError on invalid input.
ReducedWord reduce(const Word& w);
ReducedWord reduce(const ReducedWord& w);

/// reduce() plus the list of deletions performed.
ReductionTrace reduce_with_trace(const Word& w);

/// Equality of classes, decided by normal forms: both words reduce to
/// pointwise-coincident tuples. Requires same manifold and species.
bool class_equal(const Word& u, const Word& v);
bool class_equal(const ReducedWord& u, const ReducedWord& v);

/// First-coordinate projection: the head x_k. Invariant under reduce.
const Point& project_pi(const Word& w);
const Point& project_pi(const ReducedWord& w);

}  // namespace geoloop
