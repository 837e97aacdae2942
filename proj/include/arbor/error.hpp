#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

// Bad input: malformed morphisms, out-of-range objects, unmet preconditions.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CompositionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A raster too coarse to separate the curves it is asked to draw.
class ResolutionError : public DomainError {
public:
    using DomainError::DomainError;
};

// An exhaustive enumeration would exceed its configured bound.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// An internal consistency check of the combinatorial model failed. Never
// expected to fire; if it does, the model (or this code) is wrong.
class ModelViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace arbor
