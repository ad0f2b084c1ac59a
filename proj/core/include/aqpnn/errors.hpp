#pragma once

#include <stdexcept>
#include <string>

namespace aqpnn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

// Eq. (4)-style solve has no real angle solution for the given target.
struct NoRealSolution : Error {
    using Error::Error;
};

struct ZeroWeightedSum : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    int max_epochs;
    explicit NonConvergence(int epochs)
        : Error("training did not converge within " + std::to_string(epochs) + " epochs"),
          max_epochs(epochs) {}
};

struct InvalidPattern : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct UnknownDataset : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct TooManyClasses : Error {
    using Error::Error;
};

struct EmptyModel : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

} // namespace aqpnn
