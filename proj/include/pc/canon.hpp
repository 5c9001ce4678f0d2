#pragma once

#include <span>
#include <string>
#include <vector>

#include "pc/graph.hpp"

namespace pc {

constexpr int kCanonicalMaxVertices = 12;

struct CanonicalForm {
    Graph graph;                // g relabeled by `label`
    std::vector<Vertex> label;  // label[v] = canonical position of v
    std::vector<Vertex> orbit;  // smallest vertex in v's automorphism orbit
};

/// Canonical relabeling by minimizing the relabeled adjacency rows over the
/// leaves of an individualization/refinement tree. Refinement splits cells by
/// neighbour counts into earlier cells, starting from the partition by
/// `colors` (ascending, all zero when empty). Exchangeable twins inside a
/// target cell are explored once. Automorphisms found between equal leaves,
/// together with those twin swaps, give the orbits.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// graph6 text of the canonical relabeling; equal iff isomorphic. n <= 12.
std::string canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace pc
