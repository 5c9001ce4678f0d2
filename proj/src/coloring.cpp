#include "pc/coloring.hpp"

#include <algorithm>
#include <string>

#include "pc/error.hpp"

namespace pc {

EdgeColoring::EdgeColoring(Graph graph, int k, std::vector<Color> colors)
    : graph_(std::move(graph)), k_(k), colors_(std::move(colors))
{
    if (k_ < 1 || k_ > kMaxPaletteSize)
        throw Error(ErrorCode::InvalidArgument, "palette size " + std::to_string(k_) + " outside 1.." +
                                                    std::to_string(kMaxPaletteSize));
    if (static_cast<int>(colors_.size()) != graph_.size())
        throw Error(ErrorCode::ColoringGraphMismatch, std::to_string(colors_.size()) + " colors for " +
                                                          std::to_string(graph_.size()) + " edges");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] < 1 || colors_[i] > k_)
            throw Error(ErrorCode::InvalidArgument, "color " + std::to_string(colors_[i]) + " on edge " +
                                                        std::to_string(i) + " outside 1.." + std::to_string(k_));
}

EdgeColoring EdgeColoring::uniform(Graph graph, Color c)
{
    int m = graph.size();
    return EdgeColoring(std::move(graph), std::max(c, 1), std::vector<Color>(m, c));
}

Color EdgeColoring::color(Vertex u, Vertex v) const
{
    auto idx = graph_.edge_index(u, v);
    if (!idx)
        throw Error(ErrorCode::NotAPath, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return colors_[*idx];
}

int EdgeColoring::colors_used() const
{
    std::uint64_t used = 0;
    for (Color c : colors_)
        used |= std::uint64_t{1} << c;
    return std::popcount(used);
}

bool PathProfile::contains(Color start, Color end) const
{
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(start, end));
}

bool PathProfile::has_strong_witness() const
{
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].first != pairs[j].first && pairs[i].second != pairs[j].second)
                return true;
    return false;
}

PathProfile PathProfile::reversed() const
{
    PathProfile r;
    for (auto [s, e] : pairs)
        r.pairs.emplace_back(e, s);
    std::sort(r.pairs.begin(), r.pairs.end());
    return r;
}

ProperPathSearch::ProperPathSearch(const Graph& g) : g_(g), n_(g.order()), incidence_(g.order())
{
    if (n_ > kPathSearchMaxVertices)
        throw Error(ErrorCode::TooLarge, "proper path search needs n <= " + std::to_string(kPathSearchMaxVertices) +
                                             ", got " + std::to_string(n_));
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        incidence_[e.u].emplace_back(e.v, i);
        incidence_[e.v].emplace_back(e.u, i);
    }
    const std::size_t states = (std::size_t{1} << n_) * static_cast<std::size_t>(std::max(n_, 1));
    stamp_.assign(states, 0);
    state_colors_.assign(states, 0);
    reached_end_colors_.assign(n_, 0);
}

void ProperPathSearch::set_colors(std::span<const Color> colors, int k)
{
    colors_ = colors;
    k_ = k;
}

bool ProperPathSearch::seen_state(VertexMask mask, Vertex cur, Color c)
{
    const std::size_t idx = static_cast<std::size_t>(mask) * n_ + cur;
    const std::uint32_t b = std::uint32_t{1} << c;
    if (stamp_[idx] != generation_) {
        stamp_[idx] = generation_;
        state_colors_[idx] = b;
        return false;
    }
    if (state_colors_[idx] & b)
        return true;
    state_colors_[idx] |= b;
    return false;
}

void ProperPathSearch::dfs(VertexMask mask, Vertex cur, Color last)
{
    for (auto [w, e] : incidence_[cur]) {
        if (mask & bit(w))
            continue;
        const Color c = colors_[e];
        if (c == last)
            continue;
        const VertexMask next = mask | bit(w);
        if (seen_state(next, w, c))
            continue;
        reached_ |= bit(w);
        reached_end_colors_[w] |= std::uint32_t{1} << c;
        if (stop_when_ && (reached_ & stop_when_) == stop_when_) {
            stop_ = true;
            return;
        }
        dfs(next, w, c);
        if (stop_)
            return;
    }
}

void ProperPathSearch::run(Vertex source, Color first_color)
{
    if (++generation_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        generation_ = 1;
    }
    reached_ = 0;
    stop_ = false;
    std::fill(reached_end_colors_.begin(), reached_end_colors_.end(), 0);
    const VertexMask start = bit(source);
    for (auto [w, e] : incidence_[source]) {
        const Color c = colors_[e];
        if (first_color != 0 && c != first_color)
            continue;
        if (seen_state(start | bit(w), w, c))
            continue;
        reached_ |= bit(w);
        reached_end_colors_[w] |= std::uint32_t{1} << c;
        if (stop_when_ && (reached_ & stop_when_) == stop_when_) {
            stop_ = true;
            return;
        }
        dfs(start | bit(w), w, c);
        if (stop_)
            return;
    }
}

PairCheck ProperPathSearch::proper_connected()
{
    const VertexMask all = all_vertices(n_);
    for (Vertex u = 0; u + 1 < n_; ++u) {
        const VertexMask need = all & ~all_vertices(u + 1);
        stop_when_ = need;
        run(u, 0);
        stop_when_ = 0;
        if ((reached_ & need) != need)
            return {false, std::make_pair(u, lowest(need & ~reached_))};
    }
    return {};
}

PairCheck ProperPathSearch::strong()
{
    const VertexMask all = all_vertices(n_);
    std::vector<std::vector<std::uint32_t>> ends(n_, std::vector<std::uint32_t>(k_ + 1, 0));
    auto satisfied = [&](Vertex v) {
        const auto& per_start = ends[v];
        for (Color s1 = 1; s1 <= k_; ++s1) {
            if (!per_start[s1])
                continue;
            for (Color s2 = s1 + 1; s2 <= k_; ++s2) {
                std::uint32_t e1 = per_start[s1], e2 = per_start[s2];
                if (e2 && !(e1 == e2 && std::popcount(e1) == 1))
                    return true;
            }
        }
        return false;
    };
    for (Vertex u = 0; u + 1 < n_; ++u) {
        const VertexMask need = all & ~all_vertices(u + 1);
        for (auto& row : ends)
            std::fill(row.begin(), row.end(), 0);
        VertexMask done = 0;
        for (Color s = 1; s <= k_ && (done & need) != need; ++s) {
            run(u, s);
            for (VertexMask m = need & ~done; m; m &= m - 1) {
                Vertex v = lowest(m);
                ends[v][s] = reached_end_colors_[v];
                if (satisfied(v))
                    done |= bit(v);
            }
        }
        if ((done & need) != need)
            return {false, std::make_pair(u, lowest(need & ~done))};
    }
    return {};
}

bool ProperPathSearch::walk_connected()
{
    // Product states (vertex, color of the edge used to arrive).
    const int width = k_ + 1;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_) * width);
    std::vector<std::pair<Vertex, Color>> queue;
    queue.reserve(seen.size());
    for (Vertex u = 0; u + 1 < n_; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        VertexMask reached = bit(u);
        seen[static_cast<std::size_t>(u) * width] = 1;
        queue.emplace_back(u, 0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [v, last] = queue[head];
            for (auto [w, e] : incidence_[v]) {
                const Color c = colors_[e];
                if (c == last)
                    continue;
                auto& s = seen[static_cast<std::size_t>(w) * width + c];
                if (s)
                    continue;
                s = 1;
                reached |= bit(w);
                queue.emplace_back(w, c);
            }
        }
        if (reached != all_vertices(n_))
            return false;
    }
    return true;
}

std::vector<std::uint32_t> ProperPathSearch::end_colors(Vertex u, Vertex v)
{
    std::vector<std::uint32_t> out(k_ + 1, 0);
    stop_when_ = 0;
    for (Color s = 1; s <= k_; ++s) {
        run(u, s);
        out[s] = reached_end_colors_[v];
    }
    return out;
}

namespace {

void require_connected(const EdgeColoring& c)
{
    if (!is_connected(c.graph()))
        throw Error(ErrorCode::Disconnected, "coloring of a disconnected graph");
}

}  // namespace

bool is_proper_path(const EdgeColoring& c, const VertexPath& path)
{
    if (path.size() < 2 || !is_path_in(c.graph(), path))
        throw Error(ErrorCode::NotAPath, "not a simple path with at least one edge");
    for (std::size_t i = 2; i < path.size(); ++i)
        if (c.color(path[i - 2], path[i - 1]) == c.color(path[i - 1], path[i]))
            return false;
    return true;
}

PathProfile path_profile(const EdgeColoring& c, Vertex u, Vertex v)
{
    const int n = c.graph().order();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::VertexOutOfRange, "profile endpoints out of range");
    if (u == v)
        throw Error(ErrorCode::SameVertex, "profile endpoints coincide");
    ProperPathSearch search(c.graph());
    search.set_colors(c.colors(), c.k());
    auto ends = search.end_colors(u, v);
    PathProfile p;
    for (Color s = 1; s <= c.k(); ++s)
        for (Color e = 1; e <= c.k(); ++e)
            if ((ends[s] >> e) & 1U)
                p.pairs.emplace_back(s, e);
    return p;
}

PairCheck check_proper_connected(const EdgeColoring& c)
{
    require_connected(c);
    ProperPathSearch search(c.graph());
    search.set_colors(c.colors(), c.k());
    return search.proper_connected();
}

bool is_proper_connected(const EdgeColoring& c) { return check_proper_connected(c).ok; }

PairCheck check_strong_property(const EdgeColoring& c)
{
    require_connected(c);
    ProperPathSearch search(c.graph());
    search.set_colors(c.colors(), c.k());
    return search.strong();
}

bool has_strong_property(const EdgeColoring& c) { return check_strong_property(c).ok; }

bool is_proper_walk_connected(const EdgeColoring& c)
{
    require_connected(c);
    ProperPathSearch search(c.graph());
    search.set_colors(c.colors(), c.k());
    return search.walk_connected();
}

}  // namespace pc
