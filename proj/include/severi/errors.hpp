#pragma once

#include <stdexcept>

namespace severi {

// Operands live on different surfaces.
struct SurfaceMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A query for the class E itself, which is barred from the theory.
struct ExcludedClass : std::domain_error {
    using std::domain_error::domain_error;
};

// A degree that is not computable from the data at hand: either a tangential
// degree absent from the supplied table, or a class on Fn (n >= 3) that no
// implemented recursion reaches.
struct MissingDegree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exactness guard fired: a division the formulas promise to be exact was
// not. Signals a formula or eligibility bug, never bad user input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed table file; the message names the offending line.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace severi
