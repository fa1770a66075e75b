#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace adjalg {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or index problems in the linear-algebra kernels.
struct DimensionError : Error {
    using Error::Error;
};

// Malformed external input: edge-list files, generator specs,
// loops or out-of-range vertices in an edge list, a zero residue
// in a circulant connection set. Maps to CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// A structurally valid graph handed to an operation whose
// precondition it violates (non-regular input to the basis
// construction, for example). Maps to CLI exit code 3.
struct PreconditionError : Error {
    using Error::Error;
};

// Disconnected input where a connected graph is required.
// Carries the vertex sets of the components for diagnostics.
struct DisconnectedError : PreconditionError {
    DisconnectedError(const std::string& what,
                      std::vector<std::vector<std::size_t>> comps)
        : PreconditionError(what), components(std::move(comps)) {}

    std::vector<std::vector<std::size_t>> components;
};

}  // namespace adjalg
