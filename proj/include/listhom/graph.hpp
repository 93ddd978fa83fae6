#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "listhom/colour_set.hpp"
#include "listhom/error.hpp"

namespace listhom {

using Edge = std::pair<Vertex, Vertex>;

/// Total map V(G) -> V(H), indexed by G's vertices.
using Homomorphism = std::vector<Colour>;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

/// Undirected graph on 0..n-1 without multi-edges. A loop {u,u} makes u
/// adjacent to itself. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : adjacency_(n) {}

    /// Duplicate pairs (in either orientation) collapse to a single edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges)
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                   "} has an endpoint outside [0," + std::to_string(n) + ")");
            g.adjacency_[u].push_back(v);
            if (u != v)
                g.adjacency_[v].push_back(u);
        }
        std::size_t twice = 0;
        for (Vertex u = 0; u < n; ++u) {
            auto & row = g.adjacency_[u];
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            twice += row.size();
            if (std::binary_search(row.begin(), row.end(), u)) {
                ++twice;
                ++g.loops_;
            }
        }
        g.edge_count_ = twice / 2;
        return g;
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t loop_count() const { return loops_; }

    /// Sorted; contains v itself iff v carries a loop.
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }

    bool adjacent(Vertex u, Vertex v) const
    {
        const auto & row = adjacency_[u];
        return std::binary_search(row.begin(), row.end(), v);
    }

    bool has_loop(Vertex v) const { return adjacent(v, v); }

    /// Edges as (u, v) with u <= v, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : adjacency_[u])
                if (u <= v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t loops_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Per-vertex allowed colours (the lists of a list-homomorphism instance).
class ListMapping {
public:
    ListMapping() = default;
    explicit ListMapping(std::vector<ColourSet> lists) : lists_(std::move(lists)) {}
    ListMapping(std::size_t n, ColourSet each) : lists_(n, each) {}

    static ListMapping full(std::size_t n, std::size_t k) { return ListMapping(n, ColourSet::first(k)); }

    std::size_t size() const { return lists_.size(); }
    ColourSet operator[](Vertex x) const { return lists_[x]; }
    ColourSet & operator[](Vertex x) { return lists_[x]; }
    auto begin() const { return lists_.begin(); }
    auto end() const { return lists_.end(); }

    ColourSet used_colours() const
    {
        ColourSet u;
        for (auto l : lists_)
            u |= l;
        return u;
    }

    /// Lists of the given vertices, in the given order.
    ListMapping restricted(std::span<const Vertex> vertices) const
    {
        std::vector<ColourSet> out;
        out.reserve(vertices.size());
        for (auto v : vertices)
            out.push_back(lists_[v]);
        return ListMapping(std::move(out));
    }

    friend bool operator==(const ListMapping &, const ListMapping &) = default;

private:
    std::vector<ColourSet> lists_;
};

/// Adjacency rows of a target graph as colour sets; row c contains c iff c
/// has a loop.
inline std::vector<ColourSet> adjacency_rows(const Graph & h)
{
    if (h.vertex_count() > ColourSet::capacity)
        throw InvalidInput("target graphs are limited to 64 vertices");
    std::vector<ColourSet> rows(h.vertex_count());
    for (Vertex c = 0; c < h.vertex_count(); ++c)
        for (Vertex d : h.neighbours(c))
            rows[c].insert(d);
    return rows;
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
/// Loops do not matter here.
inline std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    const auto n = g.vertex_count();
    std::vector<std::size_t> label(n, no_vertex);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != no_vertex)
            continue;
        auto & comp = components.emplace_back();
        label[s] = components.size() - 1;
        stack.push_back(s);
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto v : g.neighbours(u))
                if (label[v] == no_vertex) {
                    label[v] = label[s];
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return components;
}

inline bool is_connected(const Graph & g) { return connected_components(g).size() <= 1; }

/// Distance layers L_0 = {start}, L_1, ..., L_z of a connected graph.
struct DistanceLayers {
    Vertex start = 0;
    /// Each layer sorted by vertex index.
    std::vector<std::vector<Vertex>> layers;
    /// layer_of[v] = distance from start.
    std::vector<std::size_t> layer_of;

    std::size_t eccentricity() const { return layers.empty() ? 0 : layers.size() - 1; }
};

/// Throws NotConnected unless every vertex is reachable from v0.
inline DistanceLayers bfs_layers(const Graph & g, Vertex v0)
{
    const auto n = g.vertex_count();
    if (v0 >= n)
        throw InvalidInput("start vertex " + std::to_string(v0) + " out of range");
    DistanceLayers out;
    out.start = v0;
    out.layer_of.assign(n, no_vertex);
    out.layer_of[v0] = 0;
    out.layers.push_back({v0});
    std::size_t reached = 1;
    while (true) {
        const auto depth = out.layers.size();
        std::vector<Vertex> next;
        for (auto u : out.layers.back())
            for (auto v : g.neighbours(u))
                if (out.layer_of[v] == no_vertex) {
                    out.layer_of[v] = depth;
                    next.push_back(v);
                }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        reached += next.size();
        out.layers.push_back(std::move(next));
    }
    if (reached != n)
        throw NotConnected("only " + std::to_string(reached) + " of " + std::to_string(n) +
                           " vertices are reachable from " + std::to_string(v0));
    return out;
}

struct InducedSubgraph {
    Graph graph;
    /// New index -> parent vertex.
    std::vector<Vertex> to_parent;
    /// Parent vertex -> new index, or no_vertex when outside the subset.
    std::vector<Vertex> from_parent;
};

/// Vertex i of the result is vertices[i]; edges and loops inside the subset
/// are kept.
inline InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    out.from_parent.assign(g.vertex_count(), no_vertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto v = vertices[i];
        if (v >= g.vertex_count())
            throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        if (out.from_parent[v] != no_vertex)
            throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " listed twice");
        out.from_parent[v] = i;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (auto w : g.neighbours(vertices[i])) {
            auto j = out.from_parent[w];
            if (j != no_vertex && i <= j)
                edges.emplace_back(i, j);
        }
    out.graph = Graph::from_edges(vertices.size(), edges);
    return out;
}

/// Complement of the loopless part of g; the result is simple.
inline Graph complement(const Graph & g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count(), edges);
}

/// Copy of g with a loop added at every listed vertex.
inline Graph with_loops(const Graph & g, std::span<const Vertex> at)
{
    auto edges = g.edges();
    for (auto v : at)
        edges.emplace_back(v, v);
    return Graph::from_edges(g.vertex_count(), edges);
}

/// Every edge of g, loops included, lands on an edge of h.
inline bool is_homomorphism(const Graph & g, const Graph & h, std::span<const Colour> f)
{
    if (f.size() != g.vertex_count())
        return false;
    for (auto c : f)
        if (c >= h.vertex_count())
            return false;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (auto y : g.neighbours(x))
            if (x <= y && !h.adjacent(f[x], f[y]))
                return false;
    return true;
}

inline bool obeys_lists(std::span<const Colour> f, const ListMapping & lists)
{
    if (f.size() != lists.size())
        return false;
    for (Vertex x = 0; x < f.size(); ++x)
        if (!lists[x].contains(f[x]))
            return false;
    return true;
}

} // namespace listhom
