#pragma once

#include <stdexcept>
#include <string>

namespace ptb {

// Malformed input: bad JSON, bad dimensions, bad literals. CLI exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar matrices define the zero hyperplane class, no section. CLI exit 3.
struct ScalarMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-field verification requires a split characteristic polynomial.
struct NonSplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression syntax error with a byte offset for caret diagnostics.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t p, const std::string& msg) : std::runtime_error(msg), pos(p) {}
};

} // namespace ptb
