#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pc/coloring.hpp"

namespace pc {

enum class Strategy {
    Complete,
    HamiltonPath,
    Tree,
    BipartiteBridgeless,
    Bridgeless3,
    Glue,
    Extend,
    SubstructureS,
    Pipeline,
    Exhaustive,
};

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view name);

/// A coloring together with the claims made about it. Certificates built by
/// this library are re-checked before they are handed out, so `verified`
/// means the checker accepted the coloring, not that a construction said so.
struct PcCertificate {
    EdgeColoring coloring;
    Strategy strategy = Strategy::Exhaustive;
    bool strong = false;
    bool verified = false;

    const Graph& graph() const { return coloring.graph(); }
    int k() const { return coloring.k(); }
};

enum class StrongClaim { None, Detect, Required };

/// Runs the checker on `coloring` and wraps it. Throws VerificationFailed if
/// it is not proper connected, or not strong under StrongClaim::Required.
PcCertificate certify(EdgeColoring coloring, Strategy strategy, StrongClaim strong = StrongClaim::None);

/// Same certificate on the graph relabeled by `labels` (old vertex -> new vertex).
PcCertificate relabel_certificate(const PcCertificate& cert, std::span<const Vertex> labels);

/// Extends a certificate of a connected spanning subgraph to g. `labels` maps
/// cert vertices onto g's vertices; edges of g outside the image get color 1.
PcCertificate lift_certificate(const PcCertificate& cert, const Graph& g, std::span<const Vertex> labels,
                               Strategy strategy);

struct ColoredEdge {
    Edge edge;
    Color color;
};

/// Compact graph spanned by `edges` (given in global labels) plus the global
/// label of each local vertex.
struct ColoredSubgraph {
    EdgeColoring coloring;
    std::vector<Vertex> labels;
};
ColoredSubgraph colored_subgraph(std::span<const ColoredEdge> edges, int k);

}  // namespace pc
