#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "listhom/graph.hpp"
#include "listhom/representation.hpp"

namespace listhom {

/// Seeded random source. The engine is MT19937-64 (seeded through
/// init_genrand64), whose output sequence is fixed by its published
/// constants; bounded integers and doubles are derived here rather than via
/// <random> distributions so instances reproduce across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound)
    {
        // 2^64 mod bound; values below it would bias the low residues.
        const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
        while (true) {
            auto r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Edges x_i x_j for i < j with pi(i) < pi(j) (non-inversions).
inline Graph permutation_graph(const PermutationSpec & spec)
{
    validate(spec);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < spec.size(); ++i)
        for (Vertex j = i + 1; j < spec.size(); ++j)
            if (spec.pi[i] < spec.pi[j])
                edges.emplace_back(i, j);
    return Graph::from_edges(spec.size(), edges);
}

/// Intersection graph of the intervals.
inline Graph interval_graph(const IntervalSpec & spec)
{
    validate(spec);
    std::vector<Edge> edges;
    const auto & iv = spec.intervals;
    for (Vertex i = 0; i < iv.size(); ++i)
        for (Vertex j = i + 1; j < iv.size(); ++j)
            if (iv[i].left < iv[j].right && iv[j].left < iv[i].right)
                edges.emplace_back(i, j);
    return Graph::from_edges(iv.size(), edges);
}

inline Graph complete_graph(std::size_t k)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
            edges.emplace_back(a, b);
    return Graph::from_edges(k, edges);
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw InvalidInput("cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

enum class Counterexample { cycle, co_cycle, subdivided_claw, co_subdivided_claw };

/// Graphs without multi-chain orderings (cycle, co_cycle for n > 4,
/// subdivided_claw) and the complement of the subdivided claw, which has
/// them. The subdivided claw is centre 0, middles 1..3, leaves 4..6.
inline Graph counterexample(Counterexample which, std::size_t n = 0)
{
    switch (which) {
    case Counterexample::cycle:
        return cycle_graph(n);
    case Counterexample::co_cycle:
        return complement(cycle_graph(n));
    case Counterexample::subdivided_claw:
    case Counterexample::co_subdivided_claw: {
        auto t = build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
        return which == Counterexample::subdivided_claw ? t : complement(t);
    }
    }
    throw InvalidInput("unknown counterexample");
}

inline PermutationSpec random_permutation(std::size_t n, Rng & rng)
{
    PermutationSpec spec;
    spec.pi.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        spec.pi[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(spec.pi[i - 1], spec.pi[rng.below(i)]);
    return spec;
}

/// Random interval model with integer-valued, pairwise distinct endpoints,
/// sorted by left endpoint (so vertex 0 is the leftmost). Base positions lie
/// in [0, 2n) and base lengths in [1, max(1, n/2)]; the residue of each
/// endpoint modulo 2n encodes (vertex, side), which keeps all of them
/// distinct without changing which pairs overlap.
inline IntervalSpec random_intervals(std::size_t n, Rng & rng)
{
    IntervalSpec spec;
    const auto scale = static_cast<double>(2 * n);
    const auto max_len = std::max<std::size_t>(1, n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        auto base = static_cast<double>(rng.below(2 * n));
        auto len = static_cast<double>(1 + rng.below(max_len));
        spec.intervals.push_back({base * scale + 2.0 * double(i), (base + len) * scale + 2.0 * double(i) + 1.0});
    }
    std::sort(spec.intervals.begin(), spec.intervals.end(),
        [](const Interval & a, const Interval & b) { return a.left < b.left; });
    return spec;
}

enum class Family { permutation, interval, arbitrary_small };
enum class TargetKind { complete, random };

inline constexpr std::size_t arbitrary_family_cap = 10;

struct InstanceParams {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t k = 3;
    double list_density = 1.0;
    Family family = Family::permutation;
    TargetKind target = TargetKind::complete;
    /// For TargetKind::random: chance of each non-loop target edge.
    double target_edge_probability = 0.5;
    double target_loop_probability = 0.0;
    double graph_loop_probability = 0.0;
};

struct Instance {
    Graph graph;
    ListMapping lists;
    Graph target;
    std::optional<PermutationSpec> permutation;
    std::optional<IntervalSpec> intervals;
};

/// Draw order: graph, target edges, target loops, lists, graph loops.
inline Instance random_instance(const InstanceParams & p)
{
    if (!(p.list_density > 0.0 && p.list_density <= 1.0))
        throw InvalidInput("list density must lie in (0, 1]");
    if (p.k == 0 || p.k > ColourSet::capacity)
        throw InvalidInput("target size must lie in [1, 64]");
    if (p.family == Family::arbitrary_small && p.n > arbitrary_family_cap)
        throw InvalidInput("the arbitrary family is capped at 10 vertices");

    Rng rng(p.seed);
    Instance out;
    switch (p.family) {
    case Family::permutation:
        out.permutation = random_permutation(p.n, rng);
        out.graph = permutation_graph(*out.permutation);
        break;
    case Family::interval:
        out.intervals = random_intervals(p.n, rng);
        out.graph = interval_graph(*out.intervals);
        break;
    case Family::arbitrary_small: {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < p.n; ++i)
            for (Vertex j = i + 1; j < p.n; ++j)
                if (rng.chance(0.5))
                    edges.emplace_back(i, j);
        out.graph = Graph::from_edges(p.n, edges);
        break;
    }
    }

    if (p.target == TargetKind::complete)
        out.target = complete_graph(p.k);
    else {
        std::vector<Edge> edges;
        for (Vertex a = 0; a < p.k; ++a)
            for (Vertex b = a + 1; b < p.k; ++b)
                if (rng.chance(p.target_edge_probability))
                    edges.emplace_back(a, b);
        out.target = Graph::from_edges(p.k, edges);
    }
    if (p.target_loop_probability > 0) {
        std::vector<Vertex> loops;
        for (Vertex c = 0; c < p.k; ++c)
            if (rng.chance(p.target_loop_probability))
                loops.push_back(c);
        out.target = with_loops(out.target, loops);
    }

    std::vector<ColourSet> lists(p.n);
    for (auto & l : lists)
        for (Colour c = 0; c < p.k; ++c)
            if (p.list_density >= 1.0 || rng.chance(p.list_density))
                l.insert(c);
    out.lists = ListMapping(std::move(lists));

    if (p.graph_loop_probability > 0) {
        std::vector<Vertex> loops;
        for (Vertex x = 0; x < p.n; ++x)
            if (rng.chance(p.graph_loop_probability))
                loops.push_back(x);
        out.graph = with_loops(out.graph, loops);
    }
    return out;
}

} // namespace listhom
