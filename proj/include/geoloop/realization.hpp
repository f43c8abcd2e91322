#pragma once

#include <vector>

#include "geoloop/words.hpp"

namespace geoloop {

/// The constant-speed piecewise-geodesic path traced by a word: segments run
/// from the tail x_0 toward the head x_k, and breakpoint j sits at the
/// accumulated arc-length fraction (lambda_1 + ... + lambda_j) / L. Words of
/// total length zero realize as the constant map at the tail.
class PiecewiseLoop {
public:
    const Word& source() const { return source_; }
    double total_length() const { return total_length_; }

    /// delta_0 = 0 <= ... <= delta_k = 1; {0, 1} for constant realizations.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Evaluate at parameter t in [0,1] (clamped). at(0) returns the tail
    /// point verbatim and at(1) the head point verbatim.
    Point at(double t) const;

    bool closed() const;

private:
    friend PiecewiseLoop realize(const Word& w);
    explicit PiecewiseLoop(Word w) : source_(std::move(w)) {}

    Word source_;
    double total_length_ = 0.0;
    std::vector<double> breakpoints_;
    std::vector<GeodesicPath> segments_;  // traversal order: x_0 -> x_1, ...
};

/// Glue the segment geodesics of a based word, free loop, or based loop into
/// one constant-speed path. Throws ValidityError for invalid words and for
/// species Z (which carries no traversal anchor).
PiecewiseLoop realize(const Word& w);
PiecewiseLoop realize(const ReducedWord& w);

/// Points at(i / n) for i = 0..n.
std::vector<Point> sample_points(const PiecewiseLoop& loop, int n);

/// True iff realizing w and realizing reduce(w) trace the same image with
/// matching arc-length parameterizations. Duplicate deletions remove only
/// zero-length segments and keep the image; backtrack deletions excise
/// there-and-back excursions and change it, so any positive-length excision
/// yields false. The excised arc lengths are balanced against the two total
/// lengths as an internal consistency check.
bool reduction_preserves_image(const Word& w);

}  // namespace geoloop
