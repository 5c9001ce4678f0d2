#include "pc/constructive.hpp"

#include <algorithm>
#include <string>

#include "pc/coloring_odometer.hpp"
#include "pc/decompose.hpp"
#include "pc/error.hpp"
#include "pc/hamilton.hpp"

namespace pc {

PcCertificate color_tree(const Graph& t)
{
    if (!is_tree(t))
        throw Error(ErrorCode::NotATree, "color_tree needs a tree");
    const int n = t.order();
    const int k = std::max(max_degree(t), 1);
    std::vector<Color> colors(t.size(), 0);
    std::vector<Color> parent_color(n, 0);
    VertexMask seen = bit(0);
    std::vector<Vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        Color next = 1;
        for (Vertex w : members(t.neighbors(v) & ~seen)) {
            if (next == parent_color[v])
                ++next;
            colors[*t.edge_index(v, w)] = next;
            parent_color[w] = next;
            ++next;
            seen |= bit(w);
            queue.push_back(w);
        }
    }
    return certify(EdgeColoring(t, k, std::move(colors)), Strategy::Tree);
}

std::optional<PcCertificate> color_hamilton_path(const Graph& g)
{
    if (g.order() < 2)
        return std::nullopt;
    auto path = hamilton_path(g);
    if (!path)
        return std::nullopt;
    std::vector<Color> colors(g.size(), 1);
    for (std::size_t i = 0; i + 1 < path->size(); ++i)
        colors[*g.edge_index((*path)[i], (*path)[i + 1])] = i % 2 == 0 ? 1 : 2;
    return certify(EdgeColoring(g, 2, std::move(colors)), Strategy::HamiltonPath);
}

namespace detail {

std::vector<std::vector<Vertex>> chain_decomposition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> disc(n, -1);
    std::vector<Vertex> parent(n, -1), preorder;
    std::vector<std::pair<Vertex, VertexMask>> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        disc[root] = static_cast<int>(preorder.size());
        preorder.push_back(root);
        stack.emplace_back(root, g.neighbors(root));
        while (!stack.empty()) {
            auto& [v, pending] = stack.back();
            if (!pending) {
                stack.pop_back();
                continue;
            }
            Vertex w = lowest(pending);
            pending &= pending - 1;
            if (disc[w] >= 0)
                continue;
            parent[w] = v;
            disc[w] = static_cast<int>(preorder.size());
            preorder.push_back(w);
            stack.emplace_back(w, g.neighbors(w));
        }
    }

    std::vector<std::vector<Vertex>> chains;
    std::vector<bool> visited(n, false);
    for (Vertex v : preorder) {
        for (Vertex w : members(g.neighbors(v))) {
            if (disc[w] <= disc[v] || parent[w] == v)
                continue;
            visited[v] = true;
            std::vector<Vertex> chain{v};
            Vertex x = w;
            for (;;) {
                chain.push_back(x);
                if (visited[x])
                    break;
                visited[x] = true;
                x = parent[x];
            }
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

namespace {

std::vector<ColoredEdge> chain_edges(const std::vector<Vertex>& chain, Color a, Color b)
{
    std::vector<ColoredEdge> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        Vertex u = std::min(chain[i], chain[i + 1]), v = std::max(chain[i], chain[i + 1]);
        out.push_back({{u, v}, i % 2 == 0 ? a : b});
    }
    return out;
}

std::optional<EdgeColoring> ear_guided(const Graph& g, const std::vector<std::vector<Vertex>>& chains, int palette)
{
    std::vector<std::pair<Color, Color>> options;
    for (Color a = 1; a <= palette; ++a)
        for (Color b = a + 1; b <= palette; ++b) {
            options.emplace_back(a, b);
            options.emplace_back(b, a);
        }
    std::vector<ColoredEdge> so_far;
    for (const auto& chain : chains) {
        std::size_t chosen = 0;
        for (std::size_t o = 0; o < options.size(); ++o) {
            auto trial = so_far;
            auto add = chain_edges(chain, options[o].first, options[o].second);
            trial.insert(trial.end(), add.begin(), add.end());
            auto sub = colored_subgraph(trial, palette);
            ProperPathSearch search(sub.coloring.graph());
            search.set_colors(sub.coloring.colors(), palette);
            if (search.strong().ok) {
                chosen = o;
                break;
            }
        }
        auto add = chain_edges(chain, options[chosen].first, options[chosen].second);
        so_far.insert(so_far.end(), add.begin(), add.end());
    }
    std::vector<Color> colors(g.size(), 1);
    for (const auto& ce : so_far)
        colors[*g.edge_index(ce.edge.u, ce.edge.v)] = ce.color;
    EdgeColoring c(g, palette, std::move(colors));
    ProperPathSearch search(g);
    search.set_colors(c.colors(), palette);
    if (search.strong().ok)
        return c;
    return std::nullopt;
}

std::optional<EdgeColoring> exhaustive_strong(const Graph& g, int palette)
{
    ProperPathSearch search(g);
    ColoringOdometer odo(g.size(), palette, true);
    do {
        search.set_colors(odo.current(), palette);
        if (search.strong().ok)
            return EdgeColoring(g, palette, odo.current());
    } while (odo.next());
    return std::nullopt;
}

}  // namespace

std::optional<PcCertificate> strong_bridgeless(const Graph& g, bool allow_exhaustive)
{
    const bool bipartite = is_bipartite(g);
    const Strategy tag = bipartite ? Strategy::BipartiteBridgeless : Strategy::Bridgeless3;
    auto chains = chain_decomposition(g);
    auto found = ear_guided(g, chains, 2);
    if (!found && !bipartite)
        found = ear_guided(g, chains, 3);
    if (!found && allow_exhaustive) {
        found = exhaustive_strong(g, 2);
        if (!found && !bipartite)
            found = exhaustive_strong(g, 3);
    }
    if (!found)
        return std::nullopt;
    return certify(std::move(*found), tag, StrongClaim::Required);
}

}  // namespace detail

PcCertificate strong_coloring_bridgeless(const Graph& g)
{
    if (g.order() > kBridgelessMaxVertices)
        throw Error(ErrorCode::TooLarge, "strong_coloring_bridgeless needs n <= " +
                                             std::to_string(kBridgelessMaxVertices));
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "strong_coloring_bridgeless needs a connected graph");
    if (g.order() < 3)
        throw Error(ErrorCode::InvalidArgument, "strong_coloring_bridgeless needs n >= 3");
    if (auto b = find_bridges(g); !b.empty())
        throw Error(ErrorCode::HasBridge,
                    "edge " + std::to_string(b.front().u) + "-" + std::to_string(b.front().v) + " is a bridge");
    auto cert = detail::strong_bridgeless(g, true);
    if (!cert)
        throw Error(ErrorCode::VerificationExhausted, "no strong coloring with at most three colors");
    return std::move(*cert);
}

namespace {

std::vector<Vertex> check_embedding(std::span<const Vertex> map, int order, const char* side)
{
    if (static_cast<int>(map.size()) != order)
        throw Error(ErrorCode::InvalidArgument, std::string("embedding of side ") + side + " has wrong size");
    std::vector<Vertex> sorted(map.begin(), map.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || (!sorted.empty() && sorted.front() < 0))
        throw Error(ErrorCode::InvalidArgument, std::string("embedding of side ") + side + " is not injective");
    return sorted;
}

std::optional<Vertex> preimage(std::span<const Vertex> map, Vertex target)
{
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == target)
            return static_cast<Vertex>(i);
    return std::nullopt;
}

}  // namespace

PcCertificate glue_across_bridge(const PcCertificate& a, const PcCertificate& b, Edge bridge,
                                 std::span<const Vertex> map_a, std::span<const Vertex> map_b)
{
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    auto image_a = check_embedding(map_a, ga.order(), "A");
    auto image_b = check_embedding(map_b, gb.order(), "B");

    auto ap = preimage(map_a, bridge.u), aq = preimage(map_a, bridge.v);
    auto bp = preimage(map_b, bridge.u), bq = preimage(map_b, bridge.v);
    if (!ap || !aq || !bp || !bq || !ga.adjacent(*ap, *aq) || !gb.adjacent(*bp, *bq))
        throw Error(ErrorCode::NotABridge, "bridge must be an edge of both sides");

    std::vector<Vertex> shared;
    std::set_intersection(image_a.begin(), image_a.end(), image_b.begin(), image_b.end(), std::back_inserter(shared));
    if (shared.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "sides must overlap exactly in the bridge ends");

    // Which end is real on side A: the other one must be A's pendant copy.
    const bool p_on_a = ga.degree(*aq) == 1 && gb.degree(*bp) == 1;
    const bool q_on_a = ga.degree(*ap) == 1 && gb.degree(*bq) == 1;
    if (!p_on_a && !q_on_a)
        throw Error(ErrorCode::NotABridge, "bridge ends are not pendant in the opposite side");

    const int order = std::max(image_a.back(), image_b.back()) + 1;
    std::vector<Vertex> all(image_a);
    all.insert(all.end(), image_b.begin(), image_b.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (static_cast<int>(all.size()) != order)
        throw Error(ErrorCode::InvalidArgument, "embeddings must cover 0..N-1");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : ga.edges())
        pairs.emplace_back(map_a[e.u], map_a[e.v]);
    for (const Edge& e : gb.edges())
        pairs.emplace_back(map_b[e.u], map_b[e.v]);
    Graph composite = Graph::from_edge_list(order, pairs);
    auto bridges = find_bridges(composite);
    Edge normalized{std::min(bridge.u, bridge.v), std::max(bridge.u, bridge.v)};
    if (!std::binary_search(bridges.begin(), bridges.end(), normalized))
        throw Error(ErrorCode::NotABridge, "edge " + std::to_string(normalized.u) + "-" + std::to_string(normalized.v) +
                                               " is not a bridge of the composite");

    const Color ca = a.coloring.color(*ap, *aq);
    const Color cb = b.coloring.color(*bp, *bq);
    auto rename = [&](Color c) { return c == cb ? ca : (c == ca ? cb : c); };
    const int k = std::max(a.k(), b.k());

    std::vector<Color> colors(composite.size(), 0);
    for (int i = 0; i < ga.size(); ++i) {
        const Edge& e = ga.edges()[i];
        colors[*composite.edge_index(map_a[e.u], map_a[e.v])] = a.coloring.colors()[i];
    }
    for (int i = 0; i < gb.size(); ++i) {
        const Edge& e = gb.edges()[i];
        colors[*composite.edge_index(map_b[e.u], map_b[e.v])] = rename(b.coloring.colors()[i]);
    }
    return certify(EdgeColoring(std::move(composite), k, std::move(colors)), Strategy::Glue);
}

std::optional<PcCertificate> absorb_vertices(const PcCertificate& base, int added, std::span<const Edge> new_edges,
                                             int palette)
{
    const Graph& g0 = base.graph();
    const int order = g0.order() + added;
    std::vector<Edge> edges(g0.edges().begin(), g0.edges().end());
    for (const Edge& e : new_edges)
        edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    Graph g = Graph::from_edges(order, edges);
    if (!is_connected(g))
        return std::nullopt;
    const int k = std::max(palette, base.k());

    std::vector<Color> colors(g.size(), 0);
    for (int i = 0; i < g0.size(); ++i)
        colors[*g.edge_index(g0.edges()[i].u, g0.edges()[i].v)] = base.coloring.colors()[i];
    std::vector<int> fresh;
    for (int i = 0; i < g.size(); ++i)
        if (colors[i] == 0)
            fresh.push_back(i);

    ProperPathSearch search(g);
    ColoringOdometer odo(static_cast<int>(fresh.size()), palette, false);
    do {
        for (std::size_t j = 0; j < fresh.size(); ++j)
            colors[fresh[j]] = odo.current()[j];
        search.set_colors(colors, k);
        if (search.proper_connected().ok)
            return certify(EdgeColoring(g, k, colors), Strategy::Extend);
    } while (odo.next());
    return std::nullopt;
}

namespace {

std::vector<Edge> normalize_new_edges(std::span<const Edge> new_edges, int old_order, int added)
{
    std::vector<Edge> out;
    const int order = old_order + added;
    for (Edge e : new_edges) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= order)
            throw Error(ErrorCode::VertexOutOfRange, "new edge endpoint out of range");
        if (e.u == e.v)
            throw Error(ErrorCode::LoopEdge, "loop on new vertex");
        if (e.v < old_order)
            throw Error(ErrorCode::InvalidArgument, "new edge does not touch a new vertex");
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_verified(const PcCertificate& cert)
{
    if (!cert.verified)
        throw Error(ErrorCode::InvalidArgument, "base certificate is not verified");
}

}  // namespace

PcCertificate extend_vertex(const PcCertificate& cert, std::span<const Edge> new_edges)
{
    require_verified(cert);
    if (cert.k() > 2)
        throw Error(ErrorCode::InvalidArgument, "extend_vertex needs a certificate with k <= 2");
    const int n = cert.graph().order();
    auto edges = normalize_new_edges(new_edges, n, 1);
    if (edges.size() < 2)
        throw Error(ErrorCode::DegreeTooLow, "new vertex has degree " + std::to_string(edges.size()));
    auto out = absorb_vertices(cert, 1, edges, 2);
    if (!out)
        throw Error(ErrorCode::VerificationExhausted, "no 2-coloring of the new edges verifies");
    return std::move(*out);
}

PcCertificate extend_two_vertices(const PcCertificate& cert, std::span<const Edge> new_edges)
{
    require_verified(cert);
    if (!cert.strong)
        throw Error(ErrorCode::RequiresStrongProperty, "two-vertex extension needs a strong base coloring");
    const int n = cert.graph().order();
    auto edges = normalize_new_edges(new_edges, n, 2);
    int deg1 = 0, deg2 = 0, to_old = 0;
    for (const Edge& e : edges) {
        deg1 += (e.u == n || e.v == n) ? 1 : 0;
        deg2 += (e.u == n + 1 || e.v == n + 1) ? 1 : 0;
        to_old += e.u < n ? 1 : 0;
    }
    if (deg1 == 0 || deg2 == 0)
        throw Error(ErrorCode::IsolatedNewVertex, "each new vertex needs an edge");
    if (to_old == 0)
        throw Error(ErrorCode::IsolatedNewVertex, "new vertices are not attached to the base graph");
    auto out = absorb_vertices(cert, 2, edges, std::max(cert.k(), 2));
    if (!out)
        throw Error(ErrorCode::VerificationExhausted, "no coloring of the new edges verifies");
    return std::move(*out);
}

std::optional<PcCertificate> substructure_S(const Graph& g, Vertex hub, const std::array<VertexMask, 3>& parts)
{
    const int n = g.order();
    if (n > kPipelineMaxVertices)
        throw Error(ErrorCode::TooLarge, "substructure_S needs n <= " + std::to_string(kPipelineMaxVertices));
    if (hub < 0 || hub >= n)
        throw Error(ErrorCode::VertexOutOfRange, "hub out of range");
    VertexMask seen = 0;
    for (VertexMask p : parts) {
        if (!p || (p & seen) || (p & bit(hub)))
            throw Error(ErrorCode::BadPartition, "parts must be nonempty, disjoint and avoid the hub");
        seen |= p;
    }
    if (seen != (all_vertices(n) & ~bit(hub)))
        throw Error(ErrorCode::BadPartition, "parts must cover every vertex but the hub");

    auto local_hub = [&](VertexMask part, std::vector<Vertex>& labels) {
        Graph sub = induced_subgraph(g, part | bit(hub), &labels);
        Vertex h = static_cast<Vertex>(std::find(labels.begin(), labels.end(), hub) - labels.begin());
        return std::make_pair(std::move(sub), h);
    };

    std::vector<ColoredEdge> s_edges;
    {
        std::vector<Vertex> labels;
        auto [sub, h] = local_hub(parts[0], labels);
        auto cycle = hamilton_cycle_through(sub, h);
        if (!cycle)
            return std::nullopt;
        const std::size_t len = cycle->size();
        for (std::size_t j = 0; j < len; ++j) {
            Vertex x = labels[(*cycle)[j]], y = labels[(*cycle)[(j + 1) % len]];
            s_edges.push_back({{std::min(x, y), std::max(x, y)}, j % 2 == 0 ? 1 : 2});
        }
    }
    for (int i = 1; i <= 2; ++i) {
        std::vector<Vertex> labels;
        auto [sub, h] = local_hub(parts[i], labels);
        auto path = hamilton_path_from(sub, h);
        if (!path)
            return std::nullopt;
        for (std::size_t j = 0; j + 1 < path->size(); ++j) {
            Vertex x = labels[(*path)[j]], y = labels[(*path)[j + 1]];
            Color c = (j % 2 == 0) == (i == 1) ? 1 : 2;
            s_edges.push_back({{std::min(x, y), std::max(x, y)}, c});
        }
    }

    std::vector<Edge> plain;
    for (const auto& ce : s_edges)
        plain.push_back(ce.edge);
    Graph s = Graph::from_edges(n, plain);
    std::vector<Color> colors(s.size(), 1);
    for (const auto& ce : s_edges)
        colors[*s.edge_index(ce.edge.u, ce.edge.v)] = ce.color;

    ProperPathSearch search(s);
    search.set_colors(colors, 2);
    bool ok = search.proper_connected().ok;
    if (!ok) {
        ColoringOdometer odo(s.size(), 2, true);
        do {
            search.set_colors(odo.current(), 2);
            if (search.proper_connected().ok) {
                colors = odo.current();
                ok = true;
                break;
            }
        } while (odo.next());
    }
    if (!ok)
        return std::nullopt;
    PcCertificate s_cert = certify(EdgeColoring(s, 2, colors), Strategy::SubstructureS);
    std::vector<Vertex> identity(n);
    for (Vertex v = 0; v < n; ++v)
        identity[v] = v;
    return lift_certificate(s_cert, g, identity, Strategy::SubstructureS);
}

namespace {

constexpr double kMaxAbsorbColorings = 1 << 20;

struct Piece {
    PcCertificate cert;
    std::vector<Vertex> labels;  // local vertex -> vertex of the whole graph
};

std::optional<Piece> color_piece(const Graph& g, const BridgeBlockTree& bbt, int component, int palette_cap)
{
    const VertexMask comp = bbt.components[component];
    std::vector<Edge> attach;  // (inside, outside)
    for (const Edge& b : bbt.bridges) {
        if (bbt.component_of[b.u] == component)
            attach.push_back({b.u, b.v});
        else if (bbt.component_of[b.v] == component)
            attach.push_back({b.v, b.u});
    }
    const int p = static_cast<int>(attach.size());

    if (popcount(comp) == 1) {
        if (p == 0)
            return std::nullopt;
        Piece piece{color_tree(star_graph(p)), {lowest(comp)}};
        for (const Edge& a : attach)
            piece.labels.push_back(a.v);
        if (piece.cert.k() > palette_cap)
            return std::nullopt;
        return piece;
    }

    if (popcount(comp) > kPipelineMaxVertices)
        return std::nullopt;
    std::vector<Vertex> labels;
    Graph block = induced_subgraph(g, comp, &labels);
    auto base = detail::strong_bridgeless(block, block.order() <= kBridgelessMaxVertices);
    if (!base || base->k() > palette_cap)
        return std::nullopt;
    if (p == 0)
        return Piece{std::move(*base), std::move(labels)};

    const int c = block.order();
    std::vector<Edge> new_edges;
    for (int i = 0; i < p; ++i) {
        Vertex inside = static_cast<Vertex>(std::find(labels.begin(), labels.end(), attach[i].u) - labels.begin());
        new_edges.push_back({inside, c + i});
    }
    for (int palette = base->k(); palette <= palette_cap && palette <= kMaxPaletteSize; ++palette) {
        double space = 1;
        for (int i = 0; i < p; ++i)
            space *= palette;
        if (space > kMaxAbsorbColorings)
            break;
        if (auto cert = absorb_vertices(*base, p, new_edges, palette)) {
            for (const Edge& a : attach)
                labels.push_back(a.v);
            return Piece{std::move(*cert), std::move(labels)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PcCertificate> color_by_bridge_blocks(const Graph& g, int palette_cap)
{
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "bridge-block coloring needs a connected graph");
    if (g.order() < 2 || g.order() > kPipelineMaxVertices)
        return std::nullopt;
    BridgeBlockTree bbt = bridge_block_tree(g);
    const int count = static_cast<int>(bbt.components.size());

    auto first = color_piece(g, bbt, 0, palette_cap);
    if (!first)
        return std::nullopt;
    PcCertificate composite = std::move(first->cert);
    std::vector<Vertex> labels = std::move(first->labels);  // composite vertex -> vertex of g

    std::vector<bool> done(count, false);
    done[0] = true;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int c = queue[head];
        for (int d : bbt.tree_adj[c]) {
            if (done[d])
                continue;
            done[d] = true;
            queue.push_back(d);
            auto piece = color_piece(g, bbt, d, palette_cap);
            if (!piece)
                return std::nullopt;
            Edge bridge{};
            for (const Edge& b : bbt.bridges) {
                int cu = bbt.component_of[b.u], cv = bbt.component_of[b.v];
                if ((cu == c && cv == d) || (cu == d && cv == c))
                    bridge = b;
            }
            std::vector<Vertex> map_a(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i)
                map_a[i] = static_cast<Vertex>(i);
            std::vector<Vertex> map_b;
            for (Vertex global : piece->labels) {
                auto it = std::find(labels.begin(), labels.end(), global);
                if (it != labels.end()) {
                    map_b.push_back(static_cast<Vertex>(it - labels.begin()));
                } else {
                    map_b.push_back(static_cast<Vertex>(labels.size()));
                    labels.push_back(global);
                }
            }
            auto local = [&](Vertex global) {
                return static_cast<Vertex>(std::find(labels.begin(), labels.end(), global) - labels.begin());
            };
            composite = glue_across_bridge(composite, piece->cert, {local(bridge.u), local(bridge.v)}, map_a, map_b);
        }
    }
    PcCertificate out = relabel_certificate(composite, labels);
    if (!(out.graph() == g))
        throw Error(ErrorCode::VerificationFailed, "glued pieces do not reassemble the graph");
    if (count > 1)
        out.strategy = Strategy::Glue;
    return out;
}

namespace {

std::vector<Vertex> identity_labels(int n)
{
    std::vector<Vertex> out(n);
    for (Vertex v = 0; v < n; ++v)
        out[v] = v;
    return out;
}

struct Seed {
    PcCertificate cert;
    std::vector<Vertex> labels;
};

std::optional<Seed> alternating_seed(const VertexPath& walk, bool closed)
{
    std::vector<ColoredEdge> edges;
    const std::size_t len = walk.size();
    const std::size_t count = closed ? len : len - 1;
    for (std::size_t j = 0; j < count; ++j) {
        Vertex x = walk[j], y = walk[(j + 1) % len];
        edges.push_back({{std::min(x, y), std::max(x, y)}, j % 2 == 0 ? 1 : 2});
    }
    if (edges.empty())
        return std::nullopt;
    auto sub = colored_subgraph(edges, 2);
    auto check = check_proper_connected(sub.coloring);
    if (!check.ok)
        return std::nullopt;
    return Seed{certify(std::move(sub.coloring), Strategy::Extend, StrongClaim::Detect), std::move(sub.labels)};
}

std::optional<PcCertificate> grow_seed(const Graph& g, Seed seed)
{
    const int n = g.order();
    std::vector<int> local(n, -1);
    VertexMask inside = 0;
    for (std::size_t i = 0; i < seed.labels.size(); ++i) {
        local[seed.labels[i]] = static_cast<int>(i);
        inside |= bit(seed.labels[i]);
    }
    PcCertificate cert = std::move(seed.cert);
    auto admit = [&](Vertex v) {
        local[v] = static_cast<int>(seed.labels.size());
        seed.labels.push_back(v);
        inside |= bit(v);
    };

    while (inside != all_vertices(n)) {
        const int here = cert.graph().order();
        std::optional<Vertex> single;
        for (Vertex v : members(all_vertices(n) & ~inside))
            if (popcount(g.neighbors(v) & inside) >= 2) {
                single = v;
                break;
            }
        try {
            if (single) {
                std::vector<Edge> edges;
                for (Vertex w : members(g.neighbors(*single) & inside))
                    edges.push_back({local[w], here});
                cert = extend_vertex(cert, edges);
                admit(*single);
                continue;
            }
            if (!cert.strong)
                cert.strong = has_strong_property(cert.coloring);
            if (!cert.strong)
                return std::nullopt;
            std::optional<std::pair<Vertex, Vertex>> pair;
            auto outside = members(all_vertices(n) & ~inside);
            for (std::size_t i = 0; i < outside.size() && !pair; ++i)
                for (std::size_t j = i + 1; j < outside.size() && !pair; ++j) {
                    Vertex v1 = outside[i], v2 = outside[j];
                    VertexMask e1 = g.neighbors(v1) & inside, e2 = g.neighbors(v2) & inside;
                    bool joined = g.adjacent(v1, v2);
                    if ((e1 || joined) && (e2 || joined) && (e1 | e2))
                        pair = std::make_pair(v1, v2);
                }
            if (!pair)
                return std::nullopt;
            std::vector<Edge> edges;
            for (Vertex w : members(g.neighbors(pair->first) & inside))
                edges.push_back({local[w], here});
            for (Vertex w : members(g.neighbors(pair->second) & inside))
                edges.push_back({local[w], here + 1});
            if (g.adjacent(pair->first, pair->second))
                edges.push_back({here, here + 1});
            cert = extend_two_vertices(cert, edges);
            admit(pair->first);
            admit(pair->second);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::VerificationExhausted)
                return std::nullopt;
            throw;
        }
    }
    return lift_certificate(cert, g, seed.labels, Strategy::Extend);
}

}  // namespace

std::optional<PcCertificate> pc2_pipeline(const Graph& g)
{
    const int n = g.order();
    if (n > kPipelineMaxVertices)
        throw Error(ErrorCode::TooLarge, "pc2_pipeline needs n <= " + std::to_string(kPipelineMaxVertices) +
                                             ", got " + std::to_string(n));
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "pc2_pipeline needs a connected graph");
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "pc2_pipeline needs n >= 2");

    // 1. Hamilton path.
    if (auto cert = color_hamilton_path(g))
        return cert;

    const auto identity = identity_labels(n);
    const BipartiteSubgraph bs = max_bipartite_spanning_subgraph(g);
    const Graph& h = bs.subgraph;
    const bool h_connected = is_connected(h);
    std::optional<BridgeBlockTree> h_tree;
    if (h_connected)
        h_tree = bridge_block_tree(h);

    // 2. H bridgeless: strong 2-coloring of H.
    if (h_tree && h_tree->bridges.empty() && n >= 3) {
        if (auto base = detail::strong_bridgeless(h, n <= kBridgelessMaxVertices); base && base->k() == 2)
            return lift_certificate(*base, g, identity, Strategy::BipartiteBridgeless);
    }

    // 3. Bridge-block tree of H is a path.
    if (h_tree && !h_tree->bridges.empty() && h_tree->max_tree_degree() <= 2) {
        if (auto glued = color_by_bridge_blocks(h, 2))
            return lift_certificate(*glued, g, identity, Strategy::Glue);
    }

    // 4. One degree-3 node in H's bridge-block tree, a single vertex.
    if (h_tree && h_tree->max_tree_degree() == 3) {
        int hubs = 0, hub_component = -1;
        for (int c = 0; c < static_cast<int>(h_tree->components.size()); ++c)
            if (h_tree->tree_degree(c) == 3) {
                ++hubs;
                hub_component = c;
            }
        if (hubs == 1 && popcount(h_tree->components[hub_component]) == 1) {
            const Vertex hub = lowest(h_tree->components[hub_component]);
            auto branches = components(h, all_vertices(n) & ~bit(hub));
            if (branches.size() == 3) {
                for (int r = 0; r < 3; ++r) {
                    std::array<VertexMask, 3> parts{branches[r], branches[(r + 1) % 3], branches[(r + 2) % 3]};
                    if (auto cert = substructure_S(g, hub, parts))
                        return cert;
                }
            }
        }
    }

    // 5. Grow a seed by single-vertex and two-vertex extensions.
    std::vector<Seed> seeds;
    if (n <= kCycleSearchMaxVertices) {
        if (auto cycle = longest_cycle(g); cycle && cycle->size() % 2 == 0)
            if (auto seed = alternating_seed(*cycle, true))
                seeds.push_back(std::move(*seed));
    }
    for (VertexMask comp : components(with_edges_removed(h, find_bridges(h)))) {
        if (popcount(comp) < 4)
            continue;
        std::vector<Vertex> labels;
        Graph block = induced_subgraph(h, comp, &labels);
        auto base = detail::strong_bridgeless(block, block.order() <= kBridgelessMaxVertices);
        if (base && base->k() == 2)
            seeds.push_back({std::move(*base), std::move(labels)});
    }
    if (auto path = longest_path(g); path.size() >= 2)
        if (auto seed = alternating_seed(path, false))
            seeds.push_back(std::move(*seed));

    for (auto& seed : seeds)
        if (auto cert = grow_seed(g, std::move(seed)))
            return cert;
    return std::nullopt;
}

}  // namespace pc
