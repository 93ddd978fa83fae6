#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "listhom/configuration.hpp"
#include "listhom/graph.hpp"
#include "listhom/solver.hpp"

namespace listhom {

/// {"graph": {"n", "edges"}, "lists": [[c, ...], ...], "target": {"n", "edges"} | {"k"}}
/// with 0-based indices; "lists" defaults to full lists, {"k": K} is the
/// loopless complete graph K_K.
struct InstanceDocument {
    Graph graph;
    ListMapping lists;
    Graph target;
};

namespace detail {

    inline std::size_t index_field(const nlohmann::json & j, const char * what)
    {
        if (!j.is_number_integer() || j.get<long long>() < 0)
            throw InvalidInput(std::string(what) + " must be a non-negative integer");
        return j.get<std::size_t>();
    }

    inline Graph graph_from_json(const nlohmann::json & j, const char * what)
    {
        if (!j.is_object() || !j.contains("n"))
            throw InvalidInput(std::string(what) + " must be an object with \"n\"");
        auto n = index_field(j.at("n"), "n");
        std::vector<Edge> edges;
        if (j.contains("edges")) {
            const auto & e = j.at("edges");
            if (!e.is_array())
                throw InvalidInput(std::string(what) + ".edges must be an array");
            for (const auto & pair : e) {
                if (!pair.is_array() || pair.size() != 2)
                    throw InvalidInput(std::string(what) + ".edges entries must be [u, v] pairs");
                edges.emplace_back(index_field(pair[0], "edge endpoint"), index_field(pair[1], "edge endpoint"));
            }
        }
        return Graph::from_edges(n, edges);
    }

    inline bool is_loopless_complete(const Graph & h)
    {
        const auto k = h.vertex_count();
        return h.loop_count() == 0 && h.edge_count() == k * (k == 0 ? 0 : k - 1) / 2;
    }

    inline nlohmann::json edges_json(const Graph & g)
    {
        auto arr = nlohmann::json::array();
        for (auto [u, v] : g.edges())
            arr.push_back({u, v});
        return arr;
    }

} // namespace detail

inline InstanceDocument instance_from_json(const nlohmann::json & j)
{
    if (!j.is_object())
        throw InvalidInput("instance must be a JSON object");
    if (!j.contains("graph") || !j.contains("target"))
        throw InvalidInput("instance needs \"graph\" and \"target\"");
    InstanceDocument doc;
    doc.graph = detail::graph_from_json(j.at("graph"), "graph");

    const auto & t = j.at("target");
    if (t.is_object() && t.contains("k") && !t.contains("n")) {
        auto k = detail::index_field(t.at("k"), "target.k");
        std::vector<Edge> edges;
        for (Vertex a = 0; a < k; ++a)
            for (Vertex b = a + 1; b < k; ++b)
                edges.emplace_back(a, b);
        doc.target = Graph::from_edges(k, edges);
    }
    else
        doc.target = detail::graph_from_json(t, "target");
    if (doc.target.vertex_count() > ColourSet::capacity)
        throw InvalidInput("target graphs are limited to 64 vertices");

    const auto n = doc.graph.vertex_count();
    if (!j.contains("lists") || j.at("lists").is_null()) {
        doc.lists = ListMapping::full(n, doc.target.vertex_count());
        return doc;
    }
    const auto & l = j.at("lists");
    if (!l.is_array() || l.size() != n)
        throw InvalidInput("lists must be an array with one entry per graph vertex");
    std::vector<ColourSet> lists(n);
    for (Vertex x = 0; x < n; ++x) {
        if (!l[x].is_array())
            throw InvalidInput("each list must be an array of colours");
        for (const auto & c : l[x]) {
            auto colour = detail::index_field(c, "colour");
            if (colour >= doc.target.vertex_count())
                throw InvalidInput("list of vertex " + std::to_string(x) + " names colour " + std::to_string(colour) +
                                   " outside the target");
            lists[x].insert(colour);
        }
    }
    doc.lists = ListMapping(std::move(lists));
    return doc;
}

inline InstanceDocument parse_instance(const std::string & text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline nlohmann::json instance_to_json(const Graph & g, const ListMapping & lists, const Graph & target)
{
    nlohmann::json j;
    j["graph"] = {{"n", g.vertex_count()}, {"edges", detail::edges_json(g)}};
    auto ls = nlohmann::json::array();
    for (auto l : lists) {
        auto arr = nlohmann::json::array();
        for (auto c : l)
            arr.push_back(c);
        ls.push_back(std::move(arr));
    }
    j["lists"] = std::move(ls);
    if (detail::is_loopless_complete(target))
        j["target"] = {{"k", target.vertex_count()}};
    else
        j["target"] = {{"n", target.vertex_count()}, {"edges", detail::edges_json(target)}};
    return j;
}

/// {"result": bool, "witness": [...]} with the witness only when satisfiable.
inline nlohmann::json solve_result_json(const SolveResult & r)
{
    nlohmann::json j;
    j["result"] = r.satisfiable;
    if (r.witness)
        j["witness"] = *r.witness;
    return j;
}

/// Layered rendering; sentinels are drawn as double circles and the edges of
/// `path`, when given, in red.
inline std::string configuration_graph_dot(const ConfigurationGraph & cg, const std::optional<ConfigurationPath> & path)
{
    std::ostringstream out;
    const auto last = cg.nodes.size() - 1;
    auto id = [](std::size_t layer, std::size_t idx) { return "c" + std::to_string(layer) + "_" + std::to_string(idx); };

    out << "digraph configurations {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
        out << "  subgraph layer" << i << " {\n    rank=same;\n";
        for (std::size_t v = 0; v < cg.nodes[i].size(); ++v) {
            const auto & s = cg.nodes[i][v];
            out << "    " << id(i, v) << " [label=\"";
            if (i == 0 || i == last)
                out << "S" << i << "\", shape=doublecircle";
            else {
                out << "(" << s.layer << "; ";
                for (std::size_t c = 0; c < s.bound.size(); ++c)
                    out << (c ? "," : "") << s.bound[c];
                out << ")\"";
            }
            out << "];\n";
        }
        out << "  }\n";
    }
    for (std::size_t i = 0; i < cg.edges.size(); ++i)
        for (std::size_t e = 0; e < cg.edges[i].size(); ++e) {
            const auto & edge = cg.edges[i][e];
            out << "  " << id(i, edge.from) << " -> " << id(i + 1, edge.to);
            if (path && path->edges[i] == e)
                out << " [color=red, penwidth=2]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace listhom
