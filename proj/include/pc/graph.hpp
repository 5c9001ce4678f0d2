#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pc {

using Vertex = int;

// Vertex sets are bit masks over vertex labels; Graph::kMaxVertices keeps them in one word.
using VertexMask = std::uint64_t;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask all_vertices(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

VertexMask mask_of(std::initializer_list<Vertex> vs);
VertexMask mask_of(std::span<const Vertex> vs);
std::vector<Vertex> members(VertexMask m);

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
///
/// Adjacency is kept as one bit row per vertex; the edge list is sorted
/// lexicographically with u < v and defines the edge indices used by colorings.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;
    explicit Graph(int n);

    /// Normalizes the pairs (symmetrize, dedup, sort). Rejects loops and out-of-range ends.
    static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_rows(std::span<const VertexMask> rows);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexMask neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return popcount(rows_[v]); }
    std::span<const VertexMask> rows() const { return rows_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Index of edge {u,v} in edges(), if present.
    std::optional<int> edge_index(Vertex u, Vertex v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

private:
    void rebuild_edges();

    int n_ = 0;
    std::vector<VertexMask> rows_;
    std::vector<Edge> edges_;
};

struct DegreeStats {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

std::vector<VertexMask> components(const Graph& g, VertexMask within);
std::vector<VertexMask> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VertexMask within);
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

/// Vertex connectivity by brute force over vertex subsets in increasing size.
/// Exponential in n; n-1 for complete graphs, 0 for disconnected ones.
int connectivity(const Graph& g);

/// E_G(X, Y). Throws OverlappingSets if X and Y intersect.
std::vector<Edge> edges_between(const Graph& g, VertexMask x, VertexMask y);
int boundary_size(const Graph& g, VertexMask x);

/// Subgraph induced by `keep`, relabeled in increasing order. `labels` receives
/// the original vertex of each new label.
Graph induced_subgraph(const Graph& g, VertexMask keep, std::vector<Vertex>* labels = nullptr);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph with_edges_removed(const Graph& g, std::span<const Edge> removed);

// Named families used throughout tests and fixtures.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph friendship_graph(int triangles);

}  // namespace pc
