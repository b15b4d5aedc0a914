#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Thrown when a request exceeds a configured ceiling (table size,
// brute-force bound).  Callers may retry with a smaller instance.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal exactness check fails (non-exact division,
// negative multiplicity).  Never recoverable: it means an engine bug.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kron
