#pragma once

#include <stdexcept>
#include <string>

namespace omnivr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's precondition (e.g. a non-unit sphere point).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Raster shape violates a contract (W != 2H, mismatched sizes, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Unsupported factor, bad camera, unknown interpolator name.
class ConfigError : public Error {
public:
    using Error::Error;
};

// User command outside its domain (zoom level s <= 0, non-finite angles).
class InvalidCommand : public Error {
public:
    using Error::Error;
};

// Slerp between (nearly) antipodal points has no unique geodesic.
class DegenerateGeodesic : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace omnivr
