#pragma once

#include <stdexcept>
#include <string>

namespace qident {

// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// polyring
struct NotDivisible : Error {
    using Error::Error;
};
struct InvalidBinding : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};

// qseries
struct EmptyWindow : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct InsufficientOrder : Error {
    using Error::Error;
};
struct NonmonotoneCutoff : Error {
    using Error::Error;
};
struct DivergentSeries : Error {
    using Error::Error;
};

// partitions
struct EmptyPartition : Error {
    using Error::Error;
};
struct InvalidGap : Error {
    using Error::Error;
};
struct FamilyMismatch : Error {
    using Error::Error;
};

// identities
struct UnknownIdentity : Error {
    using Error::Error;
};

}  // namespace qident
