#pragma once

#include <stdexcept>
#include <string>

namespace signedflow {

// A configured resource cap (node budget, enumeration cap, size cap) was
// exceeded. Deliberately distinct from a negative mathematical answer.
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace signedflow
