#ifndef XGRAPH_ERRORS_HPP
#define XGRAPH_ERRORS_HPP

#include <stdexcept>

namespace xgraph {

// Malformed input: bad files, out-of-range ids, edge sets that are not matchings.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration exceeded the configured matching cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation outside its documented limits (e.g. canonical form on n > 10).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition does not hold (e.g. dimension of an invalid graph).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Carries enough text to reproduce.
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}

#endif
