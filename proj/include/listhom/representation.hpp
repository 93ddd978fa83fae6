#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "listhom/error.hpp"

namespace listhom {

/// A permutation of {0..n-1}; pi[i] is the image of position i. One-based in
/// all I/O, zero-based here.
struct PermutationSpec {
    std::vector<std::size_t> pi;

    std::size_t size() const { return pi.size(); }
};

inline void validate(const PermutationSpec & spec)
{
    std::vector<bool> seen(spec.pi.size(), false);
    for (auto p : spec.pi) {
        if (p >= spec.pi.size() || seen[p])
            throw InvalidInput("permutation is not a bijection on {1.." + std::to_string(spec.pi.size()) + "}");
        seen[p] = true;
    }
}

struct Interval {
    double left = 0;
    double right = 0;
};

/// An interval model: vertex i is intervals[i]. Endpoints must be pairwise
/// distinct across all 2n of them and left < right.
struct IntervalSpec {
    std::vector<Interval> intervals;

    std::size_t size() const { return intervals.size(); }
};

inline void validate(const IntervalSpec & spec)
{
    std::vector<double> endpoints;
    endpoints.reserve(2 * spec.intervals.size());
    for (auto [l, r] : spec.intervals) {
        if (!(l < r))
            throw InvalidInput("interval needs left < right");
        endpoints.push_back(l);
        endpoints.push_back(r);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        throw InvalidInput("interval endpoints must be pairwise distinct");
}

} // namespace listhom
