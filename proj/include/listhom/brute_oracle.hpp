#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "listhom/graph.hpp"

namespace listhom {

inline constexpr std::size_t default_oracle_cap = 20;

namespace detail {

    // Depth-first assignment in vertex index order. `visit` returns true to
    // stop the search.
    template <typename Visit>
    bool backtrack(const Graph & g, const ListMapping & lists, const Graph & h, Homomorphism & f, Vertex x, Visit & visit)
    {
        if (x == g.vertex_count())
            return visit(f);
        for (Colour c = 0; c < h.vertex_count(); ++c) {
            if (!lists[x].contains(c))
                continue;
            bool fits = true;
            for (auto y : g.neighbours(x)) {
                if (y > x)
                    break;
                if (!h.adjacent(y == x ? c : f[y], c)) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                continue;
            f[x] = c;
            if (backtrack(g, lists, h, f, x + 1, visit))
                return true;
        }
        return false;
    }

    inline void check_oracle_input(const Graph & g, const ListMapping & lists, const Graph & h, std::size_t cap)
    {
        if (g.vertex_count() > cap)
            throw SizeLimitExceeded("exhaustive search is capped at " + std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
        if (lists.size() != g.vertex_count())
            throw InvalidInput("list mapping size does not match the graph");
        for (auto l : lists)
            for (auto c : l)
                if (c >= h.vertex_count())
                    throw InvalidInput("a list names a colour that is not a target vertex");
    }

} // namespace detail

/// Lexicographically first list-obeying homomorphism g -> h, if any.
inline std::optional<Homomorphism> brute_force(const Graph & g, const ListMapping & lists, const Graph & h,
    std::size_t max_vertices = default_oracle_cap)
{
    detail::check_oracle_input(g, lists, h, max_vertices);
    Homomorphism f(g.vertex_count(), 0);
    std::optional<Homomorphism> found;
    auto visit = [&](const Homomorphism & m) {
        found = m;
        return true;
    };
    detail::backtrack(g, lists, h, f, 0, visit);
    return found;
}

inline std::uint64_t count_homomorphisms(const Graph & g, const ListMapping & lists, const Graph & h,
    std::size_t max_vertices = default_oracle_cap)
{
    detail::check_oracle_input(g, lists, h, max_vertices);
    Homomorphism f(g.vertex_count(), 0);
    std::uint64_t count = 0;
    auto visit = [&](const Homomorphism &) {
        ++count;
        return false;
    };
    detail::backtrack(g, lists, h, f, 0, visit);
    return count;
}

} // namespace listhom
