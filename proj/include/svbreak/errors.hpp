#pragma once

#include <stdexcept>

namespace svbreak {

// Common base so callers (notably the CLI) can catch any workbench error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidKey : Error {
    using Error::Error;
};
struct NonFiniteOrbit : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct AmbiguousDifference : Error {
    using Error::Error;
};
struct InvalidIndex : Error {
    using Error::Error;
};
struct InsufficientPairs : Error {
    using Error::Error;
};
struct BadMagic : Error {
    using Error::Error;
};
struct BadHeader : Error {
    using Error::Error;
};
struct TruncatedPixels : Error {
    using Error::Error;
};
struct UnsupportedMaxval : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace svbreak
