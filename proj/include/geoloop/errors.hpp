#pragma once

#include <stdexcept>
#include <string>

namespace geoloop {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point does not satisfy the representation contract of its manifold
// (wrong dimension, off-sphere coordinates, torus coordinate outside [0,1), ...).
struct RepresentationError : Error {
    using Error::Error;
};

// A geodesic was requested between points that are not joined by a unique
// minimal geodesic.
struct UniquenessError : Error {
    using Error::Error;
};

// A numerical trajectory left the coordinate domain of a chart manifold.
struct ChartExitError : Error {
    using Error::Error;
};

// The metric tensor failed a symmetry / positive-definiteness check.
struct GeometryError : Error {
    using Error::Error;
};

// An iterative solve (shooting Newton, chain subdivision) did not converge
// within its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// A word failed validation, or an operation was applied to a word of the
// wrong species.
struct ValidityError : Error {
    using Error::Error;
};

// Two operands live on different manifolds or use different basepoints.
struct MismatchError : Error {
    using Error::Error;
};

// A point lies outside the neighborhood of a local chart.
struct ChartDomainError : Error {
    using Error::Error;
};

// The requested invariant is not computable on this manifold kind.
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace geoloop
