#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ring construction rejected (bad parameters, non-monic modulus, ...).
struct ConstructionError : Error {
    using Error::Error;
};

// A requested structure exceeds the configured enumeration caps.
struct CapacityError : Error {
    using Error::Error;
};

// Operands belong to different rings.
struct RingMismatch : Error {
    using Error::Error;
};

// Operands were built over different endomorphisms.
struct EndoMismatch : Error {
    using Error::Error;
};

// A product in a degree-capped polynomial ring left the enumerated window.
struct DegreeOverflow : Error {
    using Error::Error;
};

// A candidate map fails additivity/multiplicativity or leaves the domain.
struct NotAnEndomorphism : Error {
    using Error::Error;
};

// An exhaustive scan would exceed the configured budget and sampling is not allowed.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Deciders reject the one-element ring.
struct DegenerateRing : Error {
    using Error::Error;
};

// An operation that needs a total finite ring was given a graded window.
struct NotFinite : Error {
    using Error::Error;
};

// Built-in catalog failed its own re-derivation checks.
struct CatalogError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    int line;
    ConfigError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace skewlab
