#pragma once

#include <stdexcept>
#include <string>

namespace cbreval {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A system record violates its structural constraints (n < 2, count sums
// not matching the declared case total, and the like).
class InvalidSystemError : public Error {
public:
    using Error::Error;
};

// Every profile membership of a system is zero: no well-ordered outcome is
// possible and the possibilistic model cannot be applied.
class DegenerateSystemError : public Error {
public:
    using Error::Error;
};

// An ordered possibility distribution is empty or not normalized (largest
// value must be 1).
class InvalidDistributionError : public Error {
public:
    using Error::Error;
};

// A bar figure with no positive mass has no centroid.
class EmptyFigureError : public Error {
public:
    using Error::Error;
};

// Malformed input file (JSON schema violation, bad CSV row, unknown token).
class ParseError : public Error {
public:
    using Error::Error;
};

// Retrieval attempted against an empty case library.
class NoCasesError : public Error {
public:
    using Error::Error;
};

// Feature vector length does not match the library's declared dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A case id already exists in the library.
class IdConflictError : public Error {
public:
    using Error::Error;
};

// A numeric argument is outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

} // namespace cbreval
