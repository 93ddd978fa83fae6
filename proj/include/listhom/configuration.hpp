#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "listhom/chain_ordering.hpp"
#include "listhom/graph.hpp"

namespace listhom {

/// A node (i, B) of the configuration graph. `bound[c]` is how many leading
/// vertices of the ordered layer L_i avoid colour c. For 1 <= i <= z the
/// bound takes both the value 0 and |L_i|; the two sentinels S_0 and S_{z+1}
/// carry the all-zero bound.
struct Configuration {
    std::size_t layer = 0;
    std::vector<std::size_t> bound;

    friend auto operator<=>(const Configuration &, const Configuration &) = default;
};

/// (ell+1)^k - 2 ell^k + (ell-1)^k, the number of maps {0..k-1} -> {0..ell}
/// attaining both 0 and ell (for ell >= 1).
inline std::uint64_t configuration_count(std::size_t ell, std::size_t k)
{
    auto pow = [](std::uint64_t base, std::size_t e) {
        std::uint64_t r = 1;
        while (e-- > 0)
            r *= base;
        return r;
    };
    if (ell == 0)
        return 0;
    return pow(ell + 1, k) - 2 * pow(ell, k) + pow(ell - 1, k);
}

/// All configurations of a layer with `ell` vertices over `k` colours, in
/// lexicographic order of the bound vector.
inline std::vector<Configuration> enumerate_configurations(std::size_t layer, std::size_t ell, std::size_t k)
{
    if (ell == 0)
        throw InvalidInput("enumerate_configurations: layers are never empty");
    std::vector<Configuration> out;
    std::vector<std::size_t> bound(k, 0);

    auto fill = [&](auto & self, std::size_t pos, bool has_zero, bool has_full) -> void {
        if (pos == k) {
            if (has_zero && has_full)
                out.push_back({layer, bound});
            return;
        }
        const std::size_t remaining = k - pos - 1;
        for (std::size_t v = 0; v <= ell; ++v) {
            bool z = has_zero || v == 0;
            bool f = has_full || v == ell;
            if (std::size_t(!z) + std::size_t(!f) > remaining)
                continue;
            bound[pos] = v;
            self(self, pos + 1, z, f);
        }
    };
    fill(fill, 0, false, false);
    return out;
}

namespace detail {

    inline ColourSet below_bound(const Configuration & s, std::size_t j)
    {
        ColourSet out;
        for (Colour c = 0; c < s.bound.size(); ++c)
            if (s.bound[c] < j)
                out.insert(c);
        return out;
    }

    inline ListMapping reduced_lists(const Configuration & from, const Configuration & to,
        std::span<const Vertex> layer, const ListMapping & lists, std::span<const std::size_t> d_plus,
        std::span<const ColourSet> rows)
    {
        const auto k = rows.size();
        std::vector<ColourSet> out(layer.size());
        for (std::size_t j = 1; j <= layer.size(); ++j) {
            const auto x = layer[j - 1];
            auto allowed = lists[x] & ColourSet::first(k);
            for (Colour c = 0; c < k; ++c)
                if (from.bound[c] >= j)
                    allowed.erase(c);
            for (Colour c2 = 0; c2 < k; ++c2)
                if (d_plus[x] > to.bound[c2])
                    allowed &= rows[c2];
            out[j - 1] = allowed;
        }
        return ListMapping(std::move(out));
    }

} // namespace detail

/// The per-vertex lists under which a homomorphism of G_i provides for the
/// edge from -> to: x_j may keep colour c iff c is in its list, c is not
/// barred from position j by `from`, and every colour c' with
/// to.bound[c'] < d_plus(x_j) is adjacent to c. The result is indexed by
/// position in `layer`.
inline ListMapping reduced_lists_for_edge(const Configuration & from, const Configuration & to,
    std::span<const Vertex> layer, const ListMapping & lists, std::span<const std::size_t> d_plus, const Graph & h)
{
    auto rows = adjacency_rows(h);
    if (from.bound.size() != rows.size() || to.bound.size() != rows.size())
        throw InvalidInput("reduced_lists_for_edge: bound vectors must cover every target vertex");
    return detail::reduced_lists(from, to, layer, lists, d_plus, rows);
}

struct ConfigurationEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Colours of L_i in layer order.
    Homomorphism providing;
};

/// Layered DAG over configurations: nodes[0] = {S_0}, nodes[z+1] = {S_{z+1}},
/// edges[i] runs from nodes[i] to nodes[i+1].
struct ConfigurationGraph {
    std::vector<std::vector<Vertex>> layers;
    std::vector<std::vector<Configuration>> nodes;
    std::vector<std::vector<ConfigurationEdge>> edges;

    std::size_t node_count() const
    {
        std::size_t s = 0;
        for (auto & l : nodes)
            s += l.size();
        return s;
    }
    std::size_t edge_count() const
    {
        std::size_t s = 0;
        for (auto & l : edges)
            s += l.size();
        return s;
    }
};

/// One S_0 -> S_{z+1} path; edges[i] indexes ConfigurationGraph::edges[i].
struct ConfigurationPath {
    std::vector<std::size_t> edges;
};

/// Forward sweep over the layered DAG.
inline std::optional<ConfigurationPath> reachability(const ConfigurationGraph & cg)
{
    const auto depth = cg.nodes.size();
    if (depth < 2 || cg.edges.size() + 1 != depth)
        return std::nullopt;
    // reached_by[i][v]: edge index into cg.edges[i-1] that first reached node v
    std::vector<std::vector<std::size_t>> reached_by(depth);
    reached_by[0].assign(cg.nodes[0].size(), no_vertex);
    std::vector<std::vector<bool>> reached(depth);
    reached[0].assign(cg.nodes[0].size(), true);
    for (std::size_t i = 0; i + 1 < depth; ++i) {
        reached[i + 1].assign(cg.nodes[i + 1].size(), false);
        reached_by[i + 1].assign(cg.nodes[i + 1].size(), no_vertex);
        for (std::size_t e = 0; e < cg.edges[i].size(); ++e) {
            const auto & edge = cg.edges[i][e];
            if (reached[i][edge.from] && !reached[i + 1][edge.to]) {
                reached[i + 1][edge.to] = true;
                reached_by[i + 1][edge.to] = e;
            }
        }
    }
    if (cg.nodes.back().empty() || !reached.back()[0])
        return std::nullopt;

    ConfigurationPath path;
    path.edges.assign(depth - 1, 0);
    std::size_t node = 0;
    for (std::size_t i = depth - 1; i > 0; --i) {
        auto e = reached_by[i][node];
        path.edges[i - 1] = e;
        node = cg.edges[i - 1][e].from;
    }
    return path;
}

enum class BuildMode {
    /// Test every (S, S') pair; the graph is exactly the configuration graph.
    complete,
    /// Only test pairs whose source is reachable from S_0 and keep the first
    /// providing edge into each target. Reachability of S_{z+1} is unchanged.
    reachable_first,
};

/// Total node count including sentinels, computed without enumerating.
inline double configuration_graph_size(const MultiChainOrdering & ord, std::size_t k)
{
    double total = 2;
    for (std::size_t i = 1; i < ord.layers.size(); ++i)
        total += static_cast<double>(configuration_count(ord.layers[i].size(), k));
    return total;
}

/// Builds the configuration graph of a connected graph g with ordering `ord`
/// against the target given by `rows`. `edge_test(i, g_i, lists)` decides
/// whether the layer subgraph g_i has a homomorphism obeying `lists` and
/// returns one if so.
template <typename EdgeTest>
ConfigurationGraph build_configuration_graph_with(const Graph & g, const ListMapping & lists,
    std::span<const ColourSet> rows, const MultiChainOrdering & ord, BuildMode mode, EdgeTest && edge_test)
{
    const auto k = rows.size();
    const auto z = ord.eccentricity();

    ConfigurationGraph cg;
    cg.layers = ord.layers;
    cg.nodes.resize(z + 2);
    cg.edges.resize(z + 1);
    cg.nodes[0].push_back({0, std::vector<std::size_t>(k, 0)});

    std::vector<bool> reachable{true};
    for (std::size_t i = 0; i <= z; ++i) {
        if (i < z)
            cg.nodes[i + 1] = enumerate_configurations(i + 1, ord.layers[i + 1].size(), k);
        else
            cg.nodes[z + 1].push_back({z + 1, std::vector<std::size_t>(k, 0)});

        const auto & layer = ord.layers[i];
        auto sub = induced_subgraph(g, layer);
        std::vector<bool> next_reachable(cg.nodes[i + 1].size(), false);

        for (std::size_t t = 0; t < cg.nodes[i + 1].size(); ++t) {
            const auto & to = cg.nodes[i + 1][t];
            for (std::size_t f = 0; f < cg.nodes[i].size(); ++f) {
                if (mode == BuildMode::reachable_first && !reachable[f])
                    continue;
                auto reduced = detail::reduced_lists(cg.nodes[i][f], to, layer, lists, ord.d_plus, rows);
                bool hopeless = false;
                for (auto l : reduced)
                    hopeless = hopeless || l.empty();
                if (hopeless)
                    continue;
                if (auto chi = edge_test(i, sub.graph, reduced)) {
                    cg.edges[i].push_back({f, t, std::move(*chi)});
                    next_reachable[t] = true;
                    if (mode == BuildMode::reachable_first)
                        break;
                }
            }
        }

        reachable = std::move(next_reachable);
        if (mode == BuildMode::reachable_first && std::none_of(reachable.begin(), reachable.end(), [](bool b) { return b; }))
            break;
    }
    return cg;
}

} // namespace listhom
