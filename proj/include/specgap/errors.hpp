#ifndef SPECGAP_ERRORS_HPP
#define SPECGAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specgap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph input: self-loop, endpoint out of range, too many vertices.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

// Malformed graph6 or edge-list bytes.
class FormatError : public Error {
public:
    using Error::Error;
};

// Construction parameters outside the family's feasible range.
class InvalidParams : public Error {
public:
    using Error::Error;
};

// Rejection sampling failed to produce a connected graph.
class SamplingFailure : public Error {
public:
    using Error::Error;
};

// Normalized Laplacian is undefined for a vertex of degree zero.
class DegreeZero : public Error {
public:
    using Error::Error;
};

// Operation requires a connected graph.
class Disconnected : public Error {
public:
    using Error::Error;
};

// Iterative solver failed to converge within its iteration cap.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

// Rayleigh quotient undefined: test function vanishes in the degree norm.
class DegenerateFunction : public Error {
public:
    using Error::Error;
};

// Vector violates the harmonic constraints (degree-weighted mean zero, nonzero).
class NotHarmonic : public Error {
public:
    using Error::Error;
};

// Input size exceeds an exhaustive-mode cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace specgap

#endif
