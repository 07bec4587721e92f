#pragma once

#include <stdexcept>
#include <string>

namespace epic {

// Input files that fail to parse or violate a documented on-disk format.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Contract violations inside the pipeline: shape mismatches, empty clouds,
// broken flow chains, out-of-range parameters.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epic
