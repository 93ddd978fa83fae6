#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace listhom {

using Vertex = std::size_t;
using Colour = std::size_t;

/// Malformed arguments: out-of-range endpoints, bad lists, invalid specs.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A traversal that needs a connected graph reached only part of it.
class NotConnected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the layered algorithm needs a multi-chain ordering for a
/// connected induced subgraph that has none. `vertices()` names that
/// subgraph in the caller's vertex numbering.
class NotInClass : public std::runtime_error {
public:
    explicit NotInClass(std::vector<Vertex> vertices)
        : std::runtime_error(describe(vertices)), vertices_(std::move(vertices))
    {
    }

    const std::vector<Vertex> & vertices() const noexcept { return vertices_; }

private:
    static std::string describe(const std::vector<Vertex> & vs)
    {
        std::string s = "connected induced subgraph on {";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i > 0)
                s += ",";
            s += std::to_string(vs[i]);
        }
        return s + "} has no multi-chain ordering";
    }

    std::vector<Vertex> vertices_;
};

/// Exhaustive search refused because the instance is above its size cap.
class SizeLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Broken internal invariant (e.g. a stitched witness failed validation).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace listhom
