#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pc/graph.hpp"
#include "pc/hamilton.hpp"

namespace pc {

using Color = int;

constexpr int kMaxPaletteSize = 31;
constexpr int kPathSearchMaxVertices = 16;

/// Total assignment of colors 1..k to the edges of one graph, parallel to
/// graph.edges(). Adjacent edges may share a color.
class EdgeColoring {
public:
    EdgeColoring(Graph graph, int k, std::vector<Color> colors);

    static EdgeColoring uniform(Graph graph, Color c = 1);

    const Graph& graph() const { return graph_; }
    int k() const { return k_; }
    const std::vector<Color>& colors() const { return colors_; }
    Color color(Vertex u, Vertex v) const;
    int colors_used() const;

    bool operator==(const EdgeColoring&) const = default;

private:
    Graph graph_;
    int k_;
    std::vector<Color> colors_;
};

/// (start color, end color) pairs realized by proper simple paths u -> v.
struct PathProfile {
    std::vector<std::pair<Color, Color>> pairs;  // sorted

    bool empty() const { return pairs.empty(); }
    bool contains(Color start, Color end) const;
    /// Two pairs with different starts and different ends.
    bool has_strong_witness() const;
    PathProfile reversed() const;

    bool operator==(const PathProfile&) const = default;
};

struct PairCheck {
    bool ok = true;
    std::optional<std::pair<Vertex, Vertex>> failing_pair;  // lexicographically first
};

/// Reusable exact search over proper simple paths of one graph whose colors
/// change between queries (the solver's inner loop). Depth-first over
/// (visited set, current vertex, last color) states; each state is expanded at
/// most once per run since its future does not depend on how it was reached.
class ProperPathSearch {
public:
    explicit ProperPathSearch(const Graph& g);

    /// `colors` must outlive the queries; values in 1..k.
    void set_colors(std::span<const Color> colors, int k);

    PairCheck proper_connected();
    PairCheck strong();
    /// Necessary condition only: every pair joined by a properly colored walk.
    bool walk_connected();
    /// Bit e of result[s] set iff some proper u -> v path starts with color s and ends with color e.
    std::vector<std::uint32_t> end_colors(Vertex u, Vertex v);

    const Graph& graph() const { return g_; }

private:
    void run(Vertex source, Color first_color);
    void dfs(VertexMask mask, Vertex cur, Color last);
    bool seen_state(VertexMask mask, Vertex cur, Color c);

    const Graph& g_;
    int n_;
    std::vector<std::vector<std::pair<Vertex, int>>> incidence_;
    std::span<const Color> colors_;
    int k_ = 0;

    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> state_colors_;
    std::uint32_t generation_ = 0;

    // Per-run outputs.
    std::vector<std::uint32_t> reached_end_colors_;
    VertexMask reached_ = 0;
    VertexMask stop_when_ = 0;
    bool stop_ = false;
};

/// NotAPath unless `path` is a simple path of at least two vertices.
bool is_proper_path(const EdgeColoring& c, const VertexPath& path);

PathProfile path_profile(const EdgeColoring& c, Vertex u, Vertex v);

PairCheck check_proper_connected(const EdgeColoring& c);
bool is_proper_connected(const EdgeColoring& c);

PairCheck check_strong_property(const EdgeColoring& c);
bool has_strong_property(const EdgeColoring& c);

bool is_proper_walk_connected(const EdgeColoring& c);

}  // namespace pc
