#pragma once

#include <optional>
#include <vector>

#include "pc/graph.hpp"

namespace pc {

struct Bipartition {
    VertexMask side_u = 0;
    VertexMask side_v = 0;

    bool operator==(const Bipartition&) const = default;
};

/// Contraction of the 2-edge-connected components. Component i owns the
/// vertices in components[i]; tree_adj[i] lists neighbouring component indices
/// in increasing order, and bridges are sorted like Graph::edges().
struct BridgeBlockTree {
    std::vector<VertexMask> components;
    std::vector<Edge> bridges;
    std::vector<std::vector<int>> tree_adj;
    std::vector<int> component_of;

    int tree_degree(int c) const { return static_cast<int>(tree_adj[c].size()); }
    int max_tree_degree() const;
    std::vector<int> leaves() const;
};

/// Cut-edges via iterative lowpoint DFS, sorted.
std::vector<Edge> find_bridges(const Graph& g);
bool is_bridgeless(const Graph& g);

/// Throws Disconnected for disconnected input.
BridgeBlockTree bridge_block_tree(const Graph& g);

/// Two-coloring by BFS; the smallest vertex of every component lands in side_u.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct BipartiteSubgraph {
    Graph subgraph;
    Bipartition sides;
};

/// Spanning bipartite subgraph H with 2*d_H(v) >= d_G(v) for every v.
///
/// Default mode starts from a greedy split and applies first-improvement
/// single-vertex moves in ascending vertex order until none helps; if the
/// crossing edges leave the graph disconnected while G is connected, one side
/// of an H-component is flipped (strictly more crossing edges) and the move
/// loop resumes. `exact` scans every bipartition and keeps the first one with
/// the maximum number of crossing edges (n <= 20, else TooLarge).
BipartiteSubgraph max_bipartite_spanning_subgraph(const Graph& g, bool exact = false);

int crossing_edges(const Graph& g, VertexMask side);

}  // namespace pc
