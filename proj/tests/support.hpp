#pragma once

// Independent reference implementations and seeded generators for tests.
// Nothing here shares code with the library's search routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pc/coloring.hpp"
#include "pc/graph.hpp"

namespace pc::test {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph random_graph(Rng& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// Random labeled tree (each vertex after the first picks an earlier parent,
/// then labels are shuffled) plus independent extra edges.
inline Graph random_connected_graph(Rng& rng, int n, double p)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(perm[uniform_int(rng, 0, v - 1)], perm[v]);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline std::vector<Vertex> random_permutation(Rng& rng, int n)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline std::vector<Color> random_colors(Rng& rng, int m, int k)
{
    std::vector<Color> out(m);
    for (auto& c : out)
        c = uniform_int(rng, 1, k);
    return out;
}

/// Components counted by repeated flood fill over an explicit edge list.
inline int count_components(int n, const std::vector<Edge>& edges)
{
    std::vector<int> comp(n, -1);
    int count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = count;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : edges) {
                if (comp[e.u] == count && comp[e.v] < 0) {
                    comp[e.v] = count;
                    grew = true;
                } else if (comp[e.v] == count && comp[e.u] < 0) {
                    comp[e.u] = count;
                    grew = true;
                }
            }
        }
        ++count;
    }
    return count;
}

inline std::vector<Edge> brute_bridges(const Graph& g)
{
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    const int base = count_components(g.order(), all);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<Edge> rest;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i)
                rest.push_back(all[j]);
        if (count_components(g.order(), rest) > base)
            out.push_back(all[i]);
    }
    return out;
}

/// Visits every simple path starting at u (as vertex sequences of >= 2 vertices).
inline void for_each_simple_path(const Graph& g, Vertex u, const std::function<void(const std::vector<Vertex>&)>& f)
{
    std::vector<Vertex> path{u};
    std::vector<bool> on(g.order(), false);
    on[u] = true;
    std::function<void()> rec = [&] {
        Vertex cur = path.back();
        for (Vertex w = 0; w < g.order(); ++w) {
            if (on[w] || !g.adjacent(cur, w))
                continue;
            path.push_back(w);
            on[w] = true;
            f(path);
            rec();
            on[w] = false;
            path.pop_back();
        }
    };
    rec();
}

inline Color edge_color(const EdgeColoring& c, Vertex a, Vertex b)
{
    for (int i = 0; i < c.graph().size(); ++i) {
        const Edge& e = c.graph().edges()[i];
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
            return c.colors()[i];
    }
    return 0;
}

inline bool oracle_is_proper(const EdgeColoring& c, const std::vector<Vertex>& path)
{
    for (std::size_t i = 2; i < path.size(); ++i)
        if (edge_color(c, path[i - 2], path[i - 1]) == edge_color(c, path[i - 1], path[i]))
            return false;
    return true;
}

/// (start, end) color pairs of all proper simple u-v paths.
inline std::set<std::pair<Color, Color>> oracle_profile(const EdgeColoring& c, Vertex u, Vertex v)
{
    std::set<std::pair<Color, Color>> out;
    for_each_simple_path(c.graph(), u, [&](const std::vector<Vertex>& p) {
        if (p.back() != v || !oracle_is_proper(c, p))
            return;
        out.emplace(edge_color(c, p[0], p[1]), edge_color(c, p[p.size() - 2], p.back()));
    });
    return out;
}

inline bool oracle_proper_connected(const EdgeColoring& c)
{
    const int n = c.graph().order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (oracle_profile(c, u, v).empty())
                return false;
    return true;
}

inline bool oracle_strong(const EdgeColoring& c)
{
    const int n = c.graph().order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto prof = oracle_profile(c, u, v);
            bool ok = false;
            for (auto a : prof)
                for (auto b : prof)
                    ok = ok || (a.first != b.first && a.second != b.second);
            if (!ok)
                return false;
        }
    return true;
}

/// Isomorphism by trying all permutations; small n only.
inline bool brute_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges())
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph spider(int legs, int leg_length)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 1;
    for (int l = 0; l < legs; ++l) {
        Vertex prev = 0;
        for (int i = 0; i < leg_length; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edge_list(next, edges);
}

}  // namespace pc::test
