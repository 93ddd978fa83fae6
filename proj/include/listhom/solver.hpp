#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "listhom/chain_ordering.hpp"
#include "listhom/configuration.hpp"
#include "listhom/graph.hpp"

namespace listhom {

struct SolveOptions {
    /// Start vertex tried first when ordering the component containing it.
    std::optional<Vertex> start_hint;
    BuildMode mode = BuildMode::reachable_first;
};

struct SolveStats {
    std::size_t edge_tests = 0;
    std::size_t configuration_graphs = 0;
    std::size_t configurations = 0;
    /// Deepest nesting of configuration graphs (0 when no layered step ran).
    std::size_t max_depth = 0;
};

struct SolveResult {
    bool satisfiable = false;
    /// Present iff satisfiable.
    std::optional<Homomorphism> witness;
    SolveStats stats;
};

struct RestrictedTarget {
    /// Target induced on the colours that occur in some list.
    Graph target;
    /// Lists renumbered into `target`.
    ListMapping lists;
    std::vector<Colour> to_original;
};

struct UniversalReduction {
    Colour colour = 0;
    /// G induced on the vertices whose list lacks `colour`.
    InducedSubgraph remaining;
    ListMapping lists;
};

namespace detail {

    inline void check_instance(const Graph & g, const ListMapping & lists, const Graph & h)
    {
        if (lists.size() != g.vertex_count())
            throw InvalidInput("list mapping has " + std::to_string(lists.size()) + " entries for " +
                               std::to_string(g.vertex_count()) + " vertices");
        if (h.vertex_count() > ColourSet::capacity)
            throw InvalidInput("target graphs are limited to 64 vertices");
        if (!lists.used_colours().is_subset_of(ColourSet::first(h.vertex_count())))
            throw InvalidInput("a list names a colour that is not a target vertex");
    }

    inline std::optional<Colour> universal_colour(std::span<const ColourSet> rows)
    {
        const auto all = ColourSet::first(rows.size());
        for (Colour c = 0; c < rows.size(); ++c)
            if (all.is_subset_of(rows[c]))
                return c;
        return std::nullopt;
    }

    /// Renumbers `keep` to 0..|keep|-1 preserving order.
    inline std::vector<ColourSet> restrict_rows(std::span<const ColourSet> rows, ColourSet keep)
    {
        std::vector<ColourSet> out;
        out.reserve(keep.size());
        for (auto c : keep) {
            ColourSet row;
            Colour i = 0;
            for (auto d : keep) {
                if (rows[c].contains(d))
                    row.insert(i);
                ++i;
            }
            out.push_back(row);
        }
        return out;
    }

    inline ListMapping restrict_lists(const ListMapping & lists, ColourSet keep)
    {
        std::vector<Colour> index(ColourSet::capacity, 0);
        Colour i = 0;
        for (auto c : keep)
            index[c] = i++;
        std::vector<ColourSet> out(lists.size());
        for (Vertex x = 0; x < lists.size(); ++x)
            for (auto c : lists[x] & keep)
                out[x].insert(index[c]);
        return ListMapping(std::move(out));
    }

    inline std::optional<Colour> single_vertex_colour(bool looped, ColourSet list, std::span<const ColourSet> rows)
    {
        for (auto c : list)
            if (c < rows.size() && (!looped || rows[c].contains(c)))
                return c;
        return std::nullopt;
    }

    /// Exact answer for a connected g against a target with at most two
    /// vertices.
    inline std::optional<Homomorphism> solve_small_connected(const Graph & g, const ListMapping & lists,
        std::span<const ColourSet> rows)
    {
        const auto n = g.vertex_count();
        auto constant = [&](Colour c) -> std::optional<Homomorphism> {
            if (g.edge_count() > 0 && !rows[c].contains(c))
                return std::nullopt;
            for (auto l : lists)
                if (!l.contains(c))
                    return std::nullopt;
            return Homomorphism(n, c);
        };

        switch (rows.size()) {
        case 0:
            return std::nullopt;
        case 1:
            return constant(0);
        case 2:
            break;
        default:
            throw InternalError("small-target base case called with more than two colours");
        }

        if (!rows[0].contains(1)) {
            if (auto f = constant(0))
                return f;
            return constant(1);
        }
        if (rows[0].contains(0) || rows[1].contains(1))
            throw InternalError("two adjacent colours with a loop form a universal vertex");
        if (g.loop_count() > 0)
            return std::nullopt;

        std::vector<Colour> side(n, no_vertex);
        std::vector<Vertex> queue{0};
        side[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto v : g.neighbours(u)) {
                if (side[v] == no_vertex) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                }
                else if (side[v] == side[u])
                    return std::nullopt;
            }
        }
        for (Colour flip = 0; flip < 2; ++flip) {
            Homomorphism f(n);
            bool ok = true;
            for (Vertex x = 0; x < n && ok; ++x) {
                f[x] = side[x] ^ flip;
                ok = lists[x].contains(f[x]);
            }
            if (ok)
                return f;
        }
        return std::nullopt;
    }

    /// Recursive list-homomorphism search. Colours in returned maps refer to
    /// the `rows` passed in; `origin` names g's vertices for error reports.
    class Engine {
    public:
        explicit Engine(const SolveOptions & options) : options_(options) {}

        std::optional<Homomorphism> solve(const Graph & g, ListMapping lists, std::vector<ColourSet> rows,
            std::span<const Vertex> origin, std::size_t depth)
        {
            Homomorphism image(g.vertex_count(), no_vertex);
            std::vector<Colour> colours(rows.size());
            std::iota(colours.begin(), colours.end(), Colour{0});
            std::vector<Vertex> live(g.vertex_count());
            std::iota(live.begin(), live.end(), Vertex{0});
            std::optional<Graph> owned;
            const Graph * cur = &g;

            while (true) {
                auto used = lists.used_colours();
                if (used != ColourSet::first(rows.size())) {
                    rows = restrict_rows(rows, used);
                    lists = restrict_lists(lists, used);
                    std::vector<Colour> kept;
                    for (auto c : used)
                        kept.push_back(colours[c]);
                    colours = std::move(kept);
                }
                auto c = universal_colour(rows);
                if (!c)
                    break;
                std::vector<Vertex> keep;
                for (Vertex x = 0; x < cur->vertex_count(); ++x) {
                    if (lists[x].contains(*c))
                        image[live[x]] = colours[*c];
                    else
                        keep.push_back(x);
                }
                if (keep.empty())
                    return image;
                auto sub = induced_subgraph(*cur, keep);
                lists = lists.restricted(keep);
                for (auto & v : keep)
                    v = live[v];
                live = std::move(keep);
                owned = std::move(sub.graph);
                cur = &*owned;
            }

            const auto n = cur->vertex_count();
            if (n == 0)
                return image;
            std::vector<Vertex> here(n);
            for (Vertex x = 0; x < n; ++x)
                here[x] = origin[live[x]];

            if (n == 1) {
                auto c = single_vertex_colour(cur->has_loop(0), lists[0], rows);
                if (!c)
                    return std::nullopt;
                image[live[0]] = colours[*c];
                return image;
            }

            auto components = connected_components(*cur);
            if (components.size() > 1) {
                for (const auto & comp : components) {
                    auto sub = induced_subgraph(*cur, comp);
                    std::vector<Vertex> sub_origin(comp.size());
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        sub_origin[i] = here[comp[i]];
                    auto f = solve(sub.graph, lists.restricted(comp), rows, sub_origin, depth);
                    if (!f)
                        return std::nullopt;
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        image[live[comp[i]]] = colours[(*f)[i]];
                }
                return image;
            }

            auto f = rows.size() <= 2 ? solve_small_connected(*cur, lists, rows)
                                      : solve_layered(*cur, lists, rows, here, depth);
            if (!f)
                return std::nullopt;
            for (Vertex x = 0; x < n; ++x)
                image[live[x]] = colours[(*f)[x]];
            return image;
        }

        const SolveStats & stats() const { return stats_; }

    private:
        std::optional<Homomorphism> solve_layered(const Graph & g, const ListMapping & lists,
            const std::vector<ColourSet> & rows, std::span<const Vertex> origin, std::size_t depth)
        {
            std::optional<Vertex> hint;
            if (depth == 0 && options_.start_hint) {
                auto it = std::find(origin.begin(), origin.end(), *options_.start_hint);
                if (it != origin.end())
                    hint = static_cast<Vertex>(it - origin.begin());
            }
            auto ord = find_ordering(g, hint);
            if (!ord) {
                std::vector<Vertex> offending(origin.begin(), origin.end());
                std::sort(offending.begin(), offending.end());
                throw NotInClass(std::move(offending));
            }

            ++stats_.configuration_graphs;
            stats_.max_depth = std::max(stats_.max_depth, depth + 1);

            std::vector<std::vector<Vertex>> layer_origin;
            for (const auto & layer : ord->layers) {
                auto & lo = layer_origin.emplace_back();
                for (auto x : layer)
                    lo.push_back(origin[x]);
            }

            auto cg = build_configuration_graph_with(g, lists, rows, *ord, options_.mode,
                [&](std::size_t i, const Graph & gi, const ListMapping & reduced) {
                    ++stats_.edge_tests;
                    return solve(gi, reduced, rows, layer_origin[i], depth + 1);
                });
            stats_.configurations += cg.node_count();

            auto path = reachability(cg);
            if (!path)
                return std::nullopt;
            Homomorphism f(g.vertex_count(), no_vertex);
            for (std::size_t i = 0; i < path->edges.size(); ++i) {
                const auto & chi = cg.edges[i][path->edges[i]].providing;
                for (std::size_t pos = 0; pos < chi.size(); ++pos)
                    f[ord->layers[i][pos]] = chi[pos];
            }
            return f;
        }

        SolveOptions options_;
        SolveStats stats_;
    };

    inline std::vector<Vertex> identity_origin(std::size_t n)
    {
        std::vector<Vertex> v(n);
        std::iota(v.begin(), v.end(), Vertex{0});
        return v;
    }

} // namespace detail

/// Drops target vertices that occur in no list and renumbers the lists.
inline RestrictedTarget restrict_target(const Graph & h, const ListMapping & lists)
{
    if (!lists.used_colours().is_subset_of(ColourSet::first(h.vertex_count())))
        throw InvalidInput("a list names a colour that is not a target vertex");
    const auto colours = lists.used_colours();
    std::vector<Vertex> used(colours.begin(), colours.end());
    auto sub = induced_subgraph(h, used);
    return {std::move(sub.graph), detail::restrict_lists(lists, colours), std::move(used)};
}

/// If h has a vertex adjacent to every vertex (itself included), every G
/// vertex whose list holds it can be mapped there; returns what remains.
inline std::optional<UniversalReduction> universal_vertex_reduction(const Graph & g, const ListMapping & lists,
    const Graph & h)
{
    detail::check_instance(g, lists, h);
    auto rows = adjacency_rows(h);
    auto c = detail::universal_colour(rows);
    if (!c)
        return std::nullopt;
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (!lists[x].contains(*c))
            keep.push_back(x);
    return UniversalReduction{*c, induced_subgraph(g, keep), lists.restricted(keep)};
}

/// Direct answers when g is a single vertex or h has at most two vertices.
/// A two-vertex h that is an edge plus a loop has a universal vertex and
/// must be reduced first (InternalError otherwise).
inline SolveResult solve_base_small(const Graph & g, const ListMapping & lists, const Graph & h)
{
    detail::check_instance(g, lists, h);
    auto rows = adjacency_rows(h);
    SolveResult result;
    if (g.vertex_count() == 1) {
        if (auto c = detail::single_vertex_colour(g.has_loop(0), lists[0], rows))
            result.witness = Homomorphism{*c};
    }
    else if (h.vertex_count() <= 2) {
        Homomorphism image(g.vertex_count(), no_vertex);
        bool ok = true;
        for (const auto & comp : connected_components(g)) {
            auto sub = induced_subgraph(g, comp);
            auto f = detail::solve_small_connected(sub.graph, lists.restricted(comp), rows);
            if (!f) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < comp.size(); ++i)
                image[comp[i]] = (*f)[i];
        }
        if (ok)
            result.witness = std::move(image);
    }
    else
        throw InternalError("solve_base_small needs a single-vertex graph or a target with at most two vertices");
    result.satisfiable = result.witness.has_value();
    return result;
}

/// Decides list H-colouring of g, returning a validated witness on success.
/// Throws NotInClass when a connected induced subgraph that needs the
/// layered step has no multi-chain ordering.
inline SolveResult lh_solve(const Graph & g, const ListMapping & lists, const Graph & h, const SolveOptions & options = {})
{
    detail::check_instance(g, lists, h);
    detail::Engine engine(options);
    auto origin = detail::identity_origin(g.vertex_count());
    auto f = engine.solve(g, lists, adjacency_rows(h), origin, 0);

    SolveResult result;
    result.stats = engine.stats();
    if (f) {
        if (!is_homomorphism(g, h, *f) || !obeys_lists(*f, lists))
            throw InternalError("stitched witness failed validation");
        result.satisfiable = true;
        result.witness = std::move(f);
    }
    return result;
}

/// Whether the layer subgraph has a homomorphism obeying the reduced lists;
/// the returned map provides for the configuration edge.
inline std::optional<Homomorphism> edge_test(const Graph & layer_graph, const ListMapping & reduced, const Graph & h)
{
    return lh_solve(layer_graph, reduced, h).witness;
}

/// Configuration graph of a connected g under `ord`. Refuses (throws
/// SizeLimitExceeded) when the node count would pass `node_cap`.
inline ConfigurationGraph build_configuration_graph(const Graph & g, const ListMapping & lists, const Graph & h,
    const MultiChainOrdering & ord, BuildMode mode = BuildMode::complete,
    std::optional<std::size_t> node_cap = std::nullopt)
{
    detail::check_instance(g, lists, h);
    auto rows = adjacency_rows(h);
    if (node_cap && configuration_graph_size(ord, rows.size()) > static_cast<double>(*node_cap))
        throw SizeLimitExceeded("configuration graph would have " +
                                std::to_string(static_cast<std::uint64_t>(configuration_graph_size(ord, rows.size()))) +
                                " nodes, above the cap of " + std::to_string(*node_cap));
    detail::Engine engine(SolveOptions{});
    return build_configuration_graph_with(g, lists, rows, ord, mode,
        [&](std::size_t i, const Graph & gi, const ListMapping & reduced) {
            return engine.solve(gi, reduced, rows, ord.layers[i], 1);
        });
}

} // namespace listhom
