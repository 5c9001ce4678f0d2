#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pc/certificate.hpp"
#include "pc/graph.hpp"

namespace pc {

constexpr int kBridgelessMaxVertices = 10;
constexpr int kPipelineMaxVertices = 16;

/// Proper edge coloring with max(Delta, 1) colors, greedy from vertex 0 in
/// BFS order. Throws NotATree.
PcCertificate color_tree(const Graph& t);

/// Alternating 1,2 along a Hamilton path, color 1 elsewhere; none if the
/// graph has no Hamilton path.
std::optional<PcCertificate> color_hamilton_path(const Graph& g);

/// Strong coloring of a connected bridgeless graph (3 <= n <= 10): two
/// colors when bipartite, at most three otherwise.
///
/// Chains of a DFS ear decomposition are colored alternately one at a time,
/// keeping the first color choice under which the union so far is strong.
/// If the finished coloring is not strong, colorings are searched
/// exhaustively (up to palette renaming) with two colors and then three.
PcCertificate strong_coloring_bridgeless(const Graph& g);

/// Joins certificates of the two sides of a bridge. Each side carries the
/// other end of the bridge as a pendant vertex; map_a and map_b send their
/// vertices into the composite labels 0..N-1 and overlap exactly in the
/// bridge ends. The second palette is renamed so both sides agree on the
/// bridge; the composite uses max(kA, kB) colors and is re-verified.
PcCertificate glue_across_bridge(const PcCertificate& a, const PcCertificate& b, Edge bridge,
                                 std::span<const Vertex> map_a, std::span<const Vertex> map_b);

/// Adds vertex n (n = cert order) with the given edges, each joining n to an
/// old vertex, and searches the 2^d colorings of those edges in lexicographic
/// order. Needs a verified certificate with k <= 2 and d >= 2.
PcCertificate extend_vertex(const PcCertificate& cert, std::span<const Edge> new_edges);

/// Adds vertices n and n+1, each with at least one edge, at least one of the
/// edges reaching the old graph. Needs a strong certificate; keeps its k.
PcCertificate extend_two_vertices(const PcCertificate& cert, std::span<const Edge> new_edges);

/// Generalized absorption used by the pieces of a bridge-block gluing:
/// `added` new vertices, new edge colors searched over 1..palette with the
/// base coloring fixed. None if no assignment verifies.
std::optional<PcCertificate> absorb_vertices(const PcCertificate& base, int added, std::span<const Edge> new_edges,
                                             int palette);

/// The spanning structure S: a cycle through `hub` covering {hub} + parts[0]
/// and Hamilton paths from `hub` through {hub} + parts[1] and {hub} + parts[2],
/// colored (cycle alternating from the hub, first path starting with 1,
/// second with 2) or, failing that, by searching all 2-colorings of S. The
/// coloring is extended to g with color 1. None when a cycle or path is missing.
std::optional<PcCertificate> substructure_S(const Graph& g, Vertex hub, const std::array<VertexMask, 3>& parts);

/// Colors every 2-edge-connected component (plus pendant copies of its
/// bridges) separately and glues them along the bridge-block tree. None if
/// a piece needs more than `palette_cap` colors or is too large to color.
std::optional<PcCertificate> color_by_bridge_blocks(const Graph& g, int palette_cap);

/// Fixed-order attempt at a verified 2-color certificate:
///   1. Hamilton path;
///   2. maximum bipartite spanning subgraph H, if bridgeless;
///   3. H's bridge-block tree is a path: per-piece colorings glued;
///   4. H's bridge-block tree has one degree-3 node, a single vertex: S;
///   5. a strong or path seed grown by single-vertex and two-vertex extensions.
/// None when every stage fails. n <= 16.
std::optional<PcCertificate> pc2_pipeline(const Graph& g);

namespace detail {

/// Ear decomposition of a bridgeless connected graph by DFS chains; each
/// chain is a vertex sequence (closed when its ends coincide).
std::vector<std::vector<Vertex>> chain_decomposition(const Graph& g);

/// strong_coloring_bridgeless without the public size guard; exhaustive
/// search only when allowed.
std::optional<PcCertificate> strong_bridgeless(const Graph& g, bool allow_exhaustive);

}  // namespace detail

}  // namespace pc
