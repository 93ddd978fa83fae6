#pragma once

#include <optional>
#include <span>
#include <vector>

#include "listhom/graph.hpp"
#include "listhom/representation.hpp"

namespace listhom {

/// Distance layers from `start` whose consecutive pairs induce chain graphs,
/// with each layer ordered by non-increasing d_minus (ties by vertex index).
/// In that order the next-layer neighbours of any x are exactly the first
/// d_plus[x] vertices of the next layer.
struct MultiChainOrdering {
    Vertex start = 0;
    std::vector<std::vector<Vertex>> layers;
    std::vector<std::size_t> layer_of;
    /// Zero-based index of a vertex inside its ordered layer.
    std::vector<std::size_t> position;
    std::vector<std::size_t> d_minus;
    std::vector<std::size_t> d_plus;

    std::size_t eccentricity() const { return layers.size() - 1; }
};

namespace detail {

    // Stable counting sort by decreasing key.
    inline void sort_by_decreasing(std::vector<Vertex> & vs, const std::vector<std::size_t> & key)
    {
        std::size_t top = 0;
        for (auto v : vs)
            top = std::max(top, key[v]);
        std::vector<std::vector<Vertex>> buckets(top + 1);
        for (auto v : vs)
            buckets[top - key[v]].push_back(v);
        vs.clear();
        for (auto & b : buckets)
            vs.insert(vs.end(), b.begin(), b.end());
    }

} // namespace detail

/// Whether the edges between disjoint vertex sets a and b form a chain graph
/// (neighbourhoods into b of the vertices of a are nested). Runs the
/// degree-sorted prefix test rather than comparing pairs.
inline bool is_chain_between(const Graph & g, std::span<const Vertex> a, std::span<const Vertex> b)
{
    enum : unsigned char { none, in_a, in_b };
    std::vector<unsigned char> side(g.vertex_count(), none);
    for (auto v : a)
        side[v] = in_a;
    for (auto v : b) {
        if (side[v] == in_a)
            throw InvalidInput("is_chain_between: the two vertex sets overlap");
        side[v] = in_b;
    }

    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (auto y : b)
        for (auto x : g.neighbours(y))
            if (side[x] == in_a)
                ++degree[y];
    std::vector<Vertex> order(b.begin(), b.end());
    std::sort(order.begin(), order.end());
    detail::sort_by_decreasing(order, degree);
    std::vector<std::size_t> pos(g.vertex_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;

    for (auto x : a) {
        std::size_t count = 0;
        for (auto y : g.neighbours(x))
            count += side[y] == in_b;
        for (auto y : g.neighbours(x))
            if (side[y] == in_b && pos[y] >= count)
                return false;
    }
    return true;
}

/// Builds the distance layers from v0, orders them, and accepts them iff
/// every vertex sees a prefix of the next layer. O(n + m).
/// Throws NotConnected if g is not connected.
inline std::optional<MultiChainOrdering> ordering_from(const Graph & g, Vertex v0)
{
    auto dl = bfs_layers(g, v0);
    const auto n = g.vertex_count();

    MultiChainOrdering ord;
    ord.start = v0;
    ord.layer_of = std::move(dl.layer_of);
    ord.d_minus.assign(n, 0);
    ord.d_plus.assign(n, 0);
    for (Vertex x = 0; x < n; ++x)
        for (auto y : g.neighbours(x)) {
            if (ord.layer_of[y] + 1 == ord.layer_of[x])
                ++ord.d_minus[x];
            else if (ord.layer_of[x] + 1 == ord.layer_of[y])
                ++ord.d_plus[x];
        }

    ord.layers = std::move(dl.layers);
    ord.position.assign(n, 0);
    for (auto & layer : ord.layers) {
        detail::sort_by_decreasing(layer, ord.d_minus);
        for (std::size_t i = 0; i < layer.size(); ++i)
            ord.position[layer[i]] = i;
    }

    for (Vertex x = 0; x < n; ++x)
        for (auto y : g.neighbours(x))
            if (ord.layer_of[x] + 1 == ord.layer_of[y] && ord.position[y] >= ord.d_plus[x])
                return std::nullopt;
    return ord;
}

/// Tries `hint` first, then every vertex in increasing order; returns the
/// first ordering found. O(nm) in the worst case.
inline std::optional<MultiChainOrdering> find_ordering(const Graph & g, std::optional<Vertex> hint = std::nullopt)
{
    if (g.vertex_count() == 0)
        throw InvalidInput("find_ordering: empty graph");
    if (!is_connected(g))
        throw NotConnected("find_ordering: graph is not connected");
    if (hint) {
        if (auto ord = ordering_from(g, *hint))
            return ord;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (hint && v == *hint)
            continue;
        if (auto ord = ordering_from(g, v))
            return ord;
    }
    return std::nullopt;
}

/// For a graph built by permutation_graph: x_n (index n-1) has no outgoing
/// edge when edges and non-edges are both oriented towards the larger index,
/// and both orientations are transitive. BFS from it therefore gives a
/// multi-chain ordering of its component.
inline Vertex permutation_start_vertex(std::size_t n)
{
    if (n == 0)
        throw InvalidInput("permutation_start_vertex: empty permutation");
    return n - 1;
}

/// Index of the interval with the leftmost left endpoint.
inline Vertex interval_start_vertex(std::span<const Interval> intervals)
{
    if (intervals.empty())
        throw InvalidInput("interval_start_vertex: no intervals");
    validate(IntervalSpec{{intervals.begin(), intervals.end()}});
    Vertex best = 0;
    for (Vertex v = 1; v < intervals.size(); ++v)
        if (intervals[v].left < intervals[best].left)
            best = v;
    return best;
}

} // namespace listhom
