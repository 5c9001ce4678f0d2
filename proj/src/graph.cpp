#include "pc/graph.hpp"

#include <algorithm>
#include <string>

#include "pc/error.hpp"

namespace pc {

VertexMask mask_of(std::initializer_list<Vertex> vs)
{
    return mask_of(std::span<const Vertex>(vs.begin(), vs.size()));
}

VertexMask mask_of(std::span<const Vertex> vs)
{
    VertexMask m = 0;
    for (Vertex v : vs)
        m |= bit(v);
    return m;
}

std::vector<Vertex> members(VertexMask m)
{
    std::vector<Vertex> out;
    out.reserve(popcount(m));
    for (; m; m &= m - 1)
        out.push_back(lowest(m));
    return out;
}

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "vertex count " + std::to_string(n) + " outside 0.." +
                                             std::to_string(kMaxVertices));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    Graph g(n);
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        g.rows_[u] |= bit(v);
        g.rows_[v] |= bit(u);
    }
    g.rebuild_edges();
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
{
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (auto e : edges)
        pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
}

Graph Graph::from_rows(std::span<const VertexMask> rows)
{
    Graph g(static_cast<int>(rows.size()));
    for (int u = 0; u < g.n_; ++u) {
        if (rows[u] & bit(u))
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        if (rows[u] & ~all_vertices(g.n_))
            throw Error(ErrorCode::VertexOutOfRange, "row " + std::to_string(u) + " exceeds vertex count");
        for (VertexMask m = rows[u]; m; m &= m - 1)
            if (!(rows[lowest(m)] & bit(u)))
                throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency rows");
        g.rows_[u] = rows[u];
    }
    g.rebuild_edges();
    return g;
}

void Graph::rebuild_edges()
{
    edges_.clear();
    for (Vertex u = 0; u < n_; ++u)
        for (VertexMask m = rows_[u] & ~all_vertices(u + 1); m; m &= m - 1)
            edges_.push_back({u, lowest(m)});
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    if (u < 0 || v >= n_ || !adjacent(u, v))
        return std::nullopt;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    return static_cast<int>(it - edges_.begin());
}

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats s;
    s.degrees.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        s.degrees[v] = g.degree(v);
    if (!s.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
    }
    return s;
}

int min_degree(const Graph& g) { return degree_stats(g).min_degree; }
int max_degree(const Graph& g) { return degree_stats(g).max_degree; }

std::vector<VertexMask> components(const Graph& g, VertexMask within)
{
    std::vector<VertexMask> out;
    VertexMask left = within;
    while (left) {
        VertexMask comp = bit(lowest(left));
        VertexMask frontier = comp;
        while (frontier) {
            Vertex v = lowest(frontier);
            frontier &= frontier - 1;
            VertexMask fresh = g.neighbors(v) & within & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::vector<VertexMask> components(const Graph& g) { return components(g, all_vertices(g.order())); }

bool is_connected_within(const Graph& g, VertexMask within)
{
    if (!within)
        return true;
    VertexMask comp = bit(lowest(within));
    VertexMask frontier = comp;
    while (frontier) {
        Vertex v = lowest(frontier);
        frontier &= frontier - 1;
        VertexMask fresh = g.neighbors(v) & within & ~comp;
        comp |= fresh;
        frontier |= fresh;
    }
    return comp == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, all_vertices(g.order())); }

bool is_complete(const Graph& g)
{
    const int n = g.order();
    return g.size() == n * (n - 1) / 2;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

int connectivity(const Graph& g)
{
    const int n = g.order();
    if (n <= 1)
        return 0;
    if (!is_connected(g))
        return 0;
    if (is_complete(g))
        return n - 1;
    const VertexMask all = all_vertices(n);
    // Gosper's hack over subsets of each size; the first disconnecting size is kappa.
    for (int s = 1; s <= n - 2; ++s) {
        VertexMask sub = all_vertices(s);
        while (!(sub & ~all)) {
            if (!is_connected_within(g, all & ~sub))
                return s;
            VertexMask c = sub & (~sub + 1);
            VertexMask r = sub + c;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return n - 1;
}

std::vector<Edge> edges_between(const Graph& g, VertexMask x, VertexMask y)
{
    if (x & y)
        throw Error(ErrorCode::OverlappingSets, "vertex sets share vertex " + std::to_string(lowest(x & y)));
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        bool ux = (x >> e.u) & 1U, vx = (x >> e.v) & 1U;
        bool uy = (y >> e.u) & 1U, vy = (y >> e.v) & 1U;
        if ((ux && vy) || (uy && vx))
            out.push_back(e);
    }
    return out;
}

int boundary_size(const Graph& g, VertexMask x)
{
    return static_cast<int>(edges_between(g, x, all_vertices(g.order()) & ~x).size());
}

Graph induced_subgraph(const Graph& g, VertexMask keep, std::vector<Vertex>* labels)
{
    std::vector<Vertex> old = members(keep & all_vertices(g.order()));
    std::vector<Vertex> fresh(g.order(), -1);
    for (int i = 0; i < static_cast<int>(old.size()); ++i)
        fresh[old[i]] = i;
    std::vector<VertexMask> rows(old.size(), 0);
    for (int i = 0; i < static_cast<int>(old.size()); ++i)
        for (VertexMask m = g.neighbors(old[i]) & keep; m; m &= m - 1)
            rows[i] |= bit(fresh[lowest(m)]);
    if (labels)
        *labels = std::move(old);
    return Graph::from_rows(rows);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    std::vector<VertexMask> rows(g.order(), 0);
    for (const Edge& e : g.edges()) {
        rows[perm[e.u]] |= bit(perm[e.v]);
        rows[perm[e.v]] |= bit(perm[e.u]);
    }
    return Graph::from_rows(rows);
}

Graph with_edges_removed(const Graph& g, std::span<const Edge> removed)
{
    std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
    for (const Edge& e : removed) {
        rows[e.u] &= ~bit(e.v);
        rows[e.v] &= ~bit(e.u);
    }
    return Graph::from_rows(rows);
}

Graph complete_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            p.emplace_back(u, v);
    return Graph::from_edge_list(n, p);
}

Graph path_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int v = 0; v + 1 < n; ++v)
        p.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, p);
}

Graph cycle_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int v = 0; v < n; ++v)
        p.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, p);
}

Graph star_graph(int leaves)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int v = 1; v <= leaves; ++v)
        p.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, p);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            p.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, p);
}

Graph friendship_graph(int triangles)
{
    std::vector<std::pair<Vertex, Vertex>> p;
    for (int t = 0; t < triangles; ++t) {
        Vertex a = 1 + 2 * t, b = 2 + 2 * t;
        p.emplace_back(0, a);
        p.emplace_back(0, b);
        p.emplace_back(a, b);
    }
    return Graph::from_edge_list(1 + 2 * triangles, p);
}

}  // namespace pc
