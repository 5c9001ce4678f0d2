#pragma once

#include <optional>
#include <vector>

#include "pc/graph.hpp"

namespace pc {

constexpr int kHamiltonMaxVertices = 16;
constexpr int kCycleSearchMaxVertices = 12;

using VertexPath = std::vector<Vertex>;

// Exact searches. Paths are vertex sequences; cycles are returned as the
// vertex sequence without repeating the first vertex. All throw TooLarge past
// their vertex guard instead of running unbounded.

std::optional<VertexPath> hamilton_path(const Graph& g);
std::optional<VertexPath> hamilton_path_between(const Graph& g, Vertex u, Vertex v);
std::optional<VertexPath> hamilton_path_from(const Graph& g, Vertex u);
std::optional<VertexPath> hamilton_cycle(const Graph& g);
std::optional<VertexPath> hamilton_cycle_through(const Graph& g, Vertex u);

/// A maximum-length cycle; none for forests. n <= 12.
std::optional<VertexPath> longest_cycle(const Graph& g);

/// Simple u-v path with exactly `len` edges. n <= 12.
bool has_path_of_length(const Graph& g, Vertex u, Vertex v, int len);

/// A maximum-length simple path (at least one vertex for n >= 1). n <= 16.
VertexPath longest_path(const Graph& g);

bool is_path_in(const Graph& g, const VertexPath& path);
bool is_cycle_in(const Graph& g, const VertexPath& cycle);

}  // namespace pc
