#pragma once

#include <stdexcept>
#include <string>

namespace circpow {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid construction parameters or malformed input data.
struct GraphError : Error {
    using Error::Error;
};

// A walk power would put a loop on some vertex; the simple-graph power is
// undefined there, which always means the caller violated a girth condition.
struct LoopCreatedError : Error {
    LoopCreatedError(int vertex, int length)
        : Error("walk power of length " + std::to_string(length) +
                " creates a loop at vertex " + std::to_string(vertex)),
          vertex(vertex), length(length) {}
    int vertex;
    int length;
};

// An enumeration would exceed its configured size cap.
struct CapExceededError : Error {
    CapExceededError(const std::string& what, unsigned long long attempted)
        : Error(what + " (would need " + std::to_string(attempted) + ")"),
          attempted(attempted) {}
    unsigned long long attempted;
};

// A search ran out of its time budget. Inconclusive, never a non-existence
// answer; callers must keep this state distinct from a definite "no".
struct TimeoutError : Error {
    using Error::Error;
};

// Exact arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace circpow
