#include "geoloop/realization.hpp"

#include <algorithm>
#include <cmath>

namespace geoloop {

Point PiecewiseLoop::at(double t) const {
    const auto& pts = source_.points();
    if (t <= 0.0 || total_length_ == 0.0) return pts.back();
    if (t >= 1.0) return pts.front();
    // First breakpoint strictly above t selects the segment; zero-length
    // segments (delta_{j-1} == delta_j) are skipped automatically.
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto j = static_cast<std::size_t>(it - breakpoints_.begin());  // segment index, 1-based
    const double lo = breakpoints_[j - 1];
    const double hi = breakpoints_[j];
    const double s = (t - lo) / (hi - lo);
    return segments_[j - 1].at(s);
}

bool PiecewiseLoop::closed() const {
    return source_.species() == Species::X || source_.species() == Species::G;
}

PiecewiseLoop realize(const Word& w) {
    if (w.species() == Species::Z)
        throw ValidityError("realization needs a based word, free loop, or based loop");
    require_valid(w);

    PiecewiseLoop loop(w);

    const auto& m = w.manifold();
    const auto& pts = w.points();
    const std::size_t k = w.length();

    // Traversal order is tail to head: segment j joins x_{j-1} to x_j, which
    // sit at storage positions k-j+1 and k-j.
    std::vector<double> lengths(k);
    double total = 0.0;
    loop.segments_.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
        loop.segments_.push_back(geodesic(m, pts[k - j + 1], pts[k - j]));
        lengths[j - 1] = loop.segments_.back().length();
        total += lengths[j - 1];
    }
    loop.total_length_ = total;

    if (total == 0.0) {
        loop.segments_.clear();
        loop.breakpoints_ = {0.0, 1.0};
        return loop;
    }

    loop.breakpoints_.resize(k + 1);
    loop.breakpoints_[0] = 0.0;
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        acc += lengths[j - 1];
        loop.breakpoints_[j] = acc / total;
    }
    loop.breakpoints_[k] = 1.0;
    return loop;
}

PiecewiseLoop realize(const ReducedWord& w) { return realize(w.word()); }

std::vector<Point> sample_points(const PiecewiseLoop& loop, int n) {
    if (n < 1) throw Error("sample count must be at least 1");
    std::vector<Point> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) out.push_back(loop.at(static_cast<double>(i) / n));
    return out;
}

bool reduction_preserves_image(const Word& w) {
    auto trace = reduce_with_trace(w);
    const PiecewiseLoop before = realize(w);
    const PiecewiseLoop after = realize(trace.reduced.word());

    double excised = 0.0;
    for (const auto& e : trace.events) excised += e.excursion_length;

    // Arc-length bookkeeping: the original length must split into the
    // surviving length plus the excised excursions.
    const double scale = std::max(1.0, before.total_length());
    if (std::abs(before.total_length() - (after.total_length() + excised)) > 1e-6 * scale)
        return false;

    if (excised > 1e-9) return false;  // backtrack excursions change the image

    // Only zero-length deletions happened, so the parameterizations coincide.
    const auto& m = w.manifold();
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        if (distance(m, before.at(t), after.at(t)) > 1e-6 * scale) return false;
    }
    return true;
}

}  // namespace geoloop
