#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace krlab {

// Error taxonomy. Everything user-facing derives from Error so the C API
// can map exceptions onto status codes uniformly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown variant tag, bad recipe id, malformed registry lookups.
struct ConfigError : Error {
    using Error::Error;
};

// Caller passed values violating a documented precondition.
struct ArgumentError : Error {
    using Error::Error;
};

// Forward/backward move preconditions not met at the given position.
struct MoveError : Error {
    using Error::Error;
};

// Marked partition cannot be covered by clusters (input outside the
// supported families, or marks above 3).
struct DecompositionError : Error {
    using Error::Error;
};

// A Laurent factor left a negative q-exponent after combination.
struct LaurentError : Error {
    using Error::Error;
};

// Internal invariant broke mid-bijection. Always a bug; never swallowed.
struct IntegrityError : Error {
    using Error::Error;
};

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw ArgumentError("integer overflow in exact count arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArgumentError("integer overflow in exact count arithmetic");
    return r;
}

}  // namespace krlab
