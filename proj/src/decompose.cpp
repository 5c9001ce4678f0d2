#include "pc/decompose.hpp"

#include <algorithm>
#include <string>

#include "pc/error.hpp"

namespace pc {

int BridgeBlockTree::max_tree_degree() const
{
    int best = 0;
    for (const auto& adj : tree_adj)
        best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

std::vector<int> BridgeBlockTree::leaves() const
{
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(tree_adj.size()); ++c)
        if (tree_adj[c].size() == 1)
            out.push_back(c);
    return out;
}

std::vector<Edge> find_bridges(const Graph& g)
{
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> out;
    int timer = 0;

    struct Frame {
        Vertex v;
        VertexMask pending;
    };
    std::vector<Frame> stack;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, g.neighbors(root)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pending) {
                Vertex w = lowest(f.pending);
                f.pending &= f.pending - 1;
                if (w == parent[f.v])
                    continue;  // simple graph: exactly one parent edge
                if (disc[w] >= 0) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                } else {
                    parent[w] = f.v;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, g.neighbors(w)});
                }
                continue;
            }
            Vertex v = f.v;
            stack.pop_back();
            if (parent[v] >= 0) {
                Vertex p = parent[v];
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p])
                    out.push_back({std::min(p, v), std::max(p, v)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_bridgeless(const Graph& g) { return find_bridges(g).empty(); }

BridgeBlockTree bridge_block_tree(const Graph& g)
{
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "bridge-block tree needs a connected graph");
    BridgeBlockTree t;
    t.bridges = find_bridges(g);
    Graph rest = with_edges_removed(g, t.bridges);
    t.components = components(rest);
    t.component_of.assign(g.order(), -1);
    for (int c = 0; c < static_cast<int>(t.components.size()); ++c)
        for (Vertex v : members(t.components[c]))
            t.component_of[v] = c;
    t.tree_adj.assign(t.components.size(), {});
    for (const Edge& b : t.bridges) {
        int cu = t.component_of[b.u], cv = t.component_of[b.v];
        t.tree_adj[cu].push_back(cv);
        t.tree_adj[cv].push_back(cu);
    }
    for (auto& adj : t.tree_adj)
        std::sort(adj.begin(), adj.end());
    return t;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (side[root] >= 0)
            continue;
        side[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : members(g.neighbors(v))) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (Vertex v = 0; v < n; ++v)
        (side[v] == 0 ? b.side_u : b.side_v) |= bit(v);
    return b;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int crossing_edges(const Graph& g, VertexMask side)
{
    int count = 0;
    for (Vertex v : members(side & all_vertices(g.order())))
        count += popcount(g.neighbors(v) & ~side);
    return count;
}

namespace {

BipartiteSubgraph subgraph_for(const Graph& g, VertexMask side)
{
    const VertexMask all = all_vertices(g.order());
    std::vector<VertexMask> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        rows[v] = g.neighbors(v) & ((side >> v) & 1U ? ~side : side) & all;
    BipartiteSubgraph out{Graph::from_rows(rows), {}};
    // Normalize so vertex 0 is on side_u.
    if (g.order() > 0 && !(side & 1U))
        side = all & ~side;
    out.sides = {side & all, all & ~side};
    return out;
}

}  // namespace

BipartiteSubgraph max_bipartite_spanning_subgraph(const Graph& g, bool exact)
{
    const int n = g.order();
    const VertexMask all = all_vertices(n);
    if (exact) {
        if (n > 20)
            throw Error(ErrorCode::TooLarge, "exact max bipartite subgraph needs n <= 20, got " + std::to_string(n));
        VertexMask best_side = all;
        int best = -1;
        // Vertex 0 is pinned to side_u; every other vertex is free.
        const std::uint64_t count = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
        for (std::uint64_t s = 0; s < count; ++s) {
            VertexMask side = (s << 1) | 1U;
            side &= all;
            int c = crossing_edges(g, side);
            if (c > best) {
                best = c;
                best_side = side;
            }
        }
        return subgraph_for(g, best_side);
    }

    // Greedy: place each vertex opposite the majority of its placed neighbours.
    VertexMask side = 0, placed = 0;
    for (Vertex v = 0; v < n; ++v) {
        int in_u = popcount(g.neighbors(v) & placed & side);
        int in_v = popcount(g.neighbors(v) & placed & ~side);
        if (in_u <= in_v)
            side |= bit(v);
        placed |= bit(v);
    }

    const bool connected = is_connected(g);
    for (;;) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (Vertex v = 0; v < n; ++v) {
                VertexMask mine = (side >> v) & 1U ? side : all & ~side;
                int same = popcount(g.neighbors(v) & mine);
                int cross = g.degree(v) - same;
                if (same > cross) {
                    side ^= bit(v);
                    moved = true;
                    break;
                }
            }
        }
        if (!connected)
            break;
        BipartiteSubgraph h = subgraph_for(g, side);
        auto parts = components(h.subgraph);
        if (parts.size() <= 1)
            break;
        // Some H-component has a G-edge leaving it; all such edges are
        // monochromatic, so flipping that component gains them.
        bool flipped = false;
        for (VertexMask c : parts) {
            if (boundary_size(g, c) > 0) {
                side ^= c;
                flipped = true;
                break;
            }
        }
        if (!flipped)
            break;
    }
    return subgraph_for(g, side);
}

}  // namespace pc
