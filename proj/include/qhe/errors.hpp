#pragma once

#include <stdexcept>
#include <string>

namespace qhe {

// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter that must be strictly positive is not.
class NonPositiveError : public Error {
public:
    using Error::Error;
};

// Width ratio r does not exceed 3; the cycle degenerates.
class RatioTooSmallError : public Error {
public:
    using Error::Error;
};

// A requested level is not bound (or not in the monotone part of the
// spectrum) at the given width.
class LevelUnboundError : public Error {
public:
    using Error::Error;
};

// Probe depth v0 outside (0, d0).
class DepthOrderError : public Error {
public:
    using Error::Error;
};

// The well holds no bound level at all at the given width.
class NoBoundLevelsError : public Error {
public:
    using Error::Error;
};

// A width (or an occupation weight) lies outside the stroke it belongs to.
class OutOfStrokeRangeError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a curve.
class DomainError : public Error {
public:
    using Error::Error;
};

// The coarse scan found no interior maximum to bracket.
class BracketError : public Error {
public:
    using Error::Error;
};

// Invalid sampling grid for figure emission.
class GridError : public Error {
public:
    using Error::Error;
};

}  // namespace qhe
