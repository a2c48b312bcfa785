#pragma once

#include <stdexcept>
#include <string>

namespace polyforge {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// parse/validation -> 2, certification -> 3, resource -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle notation, JSON shape).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input violating a documented precondition.
struct ValidationError : Error {
    using Error::Error;
};

// A configured cap was exceeded (element count, face count, dimension).
struct ResourceError : Error {
    using Error::Error;
};

// An internal consistency assertion failed mid-construction; indicates a bad
// upstream choice (e.g. an orbit point interior to the hull) or a logic bug.
struct IntegrityError : Error {
    using Error::Error;
};

// A certification check on a finished object did not pass.
struct CertificationError : Error {
    using Error::Error;
};

} // namespace polyforge
