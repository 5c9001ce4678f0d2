#include "pc/hamilton.hpp"

#include <algorithm>
#include <string>

#include "pc/error.hpp"

namespace pc {

namespace {

void guard(const Graph& g, int limit, const char* op)
{
    if (g.order() > limit)
        throw Error(ErrorCode::TooLarge,
                    std::string(op) + " needs n <= " + std::to_string(limit) + ", got " + std::to_string(g.order()));
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
}

// Backtracking over (visited set, current end) with a memo of failed states.
// The future of a partial path only depends on that pair, so failures can be
// shared across restarts from different first vertices.
class SpanningPathSearch {
public:
    SpanningPathSearch(const Graph& g, std::optional<Vertex> end, std::optional<Vertex> close_to)
        : g_(g), n_(g.order()), full_(all_vertices(g.order())), end_(end), close_to_(close_to),
          failed_((std::size_t{1} << n_) * n_ / 64 + 1, 0)
    {}

    std::optional<VertexPath> from(Vertex start)
    {
        if (end_ && n_ > 1 && *end_ == start)
            return std::nullopt;
        path_.assign(1, start);
        if (extend(bit(start), start))
            return path_;
        return std::nullopt;
    }

private:
    bool is_failed(VertexMask mask, Vertex cur) const
    {
        std::size_t idx = static_cast<std::size_t>(mask) * n_ + cur;
        return (failed_[idx / 64] >> (idx % 64)) & 1U;
    }
    void mark_failed(VertexMask mask, Vertex cur)
    {
        std::size_t idx = static_cast<std::size_t>(mask) * n_ + cur;
        failed_[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }

    bool extend(VertexMask mask, Vertex cur)
    {
        if (mask == full_) {
            if (end_ && cur != *end_)
                return false;
            if (close_to_ && (n_ < 3 || !g_.adjacent(cur, *close_to_)))
                return false;
            return true;
        }
        if (is_failed(mask, cur))
            return false;
        const VertexMask rest = full_ & ~mask;
        bool feasible = is_connected_within(g_, rest | bit(cur));
        if (feasible && end_ && !(rest & bit(*end_)))
            feasible = false;
        if (feasible && close_to_ && !(g_.neighbors(*close_to_) & rest))
            feasible = false;
        if (feasible) {
            VertexMask cand = g_.neighbors(cur) & rest;
            if (end_ && popcount(rest) > 1)
                cand &= ~bit(*end_);
            std::vector<std::pair<int, Vertex>> order;
            for (VertexMask m = cand; m; m &= m - 1) {
                Vertex w = lowest(m);
                order.emplace_back(popcount(g_.neighbors(w) & rest & ~bit(w)), w);
            }
            std::sort(order.begin(), order.end());
            for (auto [score, w] : order) {
                path_.push_back(w);
                if (extend(mask | bit(w), w))
                    return true;
                path_.pop_back();
            }
        }
        mark_failed(mask, cur);
        return false;
    }

    const Graph& g_;
    int n_;
    VertexMask full_;
    std::optional<Vertex> end_;
    std::optional<Vertex> close_to_;
    std::vector<std::uint64_t> failed_;
    VertexPath path_;
};

// Forward reachability over (visited set, current end) states from one start,
// remembering a predecessor for path reconstruction. Restricting `allowed`
// restricts the vertices a path may use.
class StateReach {
public:
    StateReach(const Graph& g, Vertex start, VertexMask allowed, int max_vertices)
        : n_(g.order()), prev_((std::size_t{1} << n_) * n_, kUnseen)
    {
        std::vector<std::pair<VertexMask, Vertex>> queue;
        set(bit(start), start, kRoot);
        queue.emplace_back(bit(start), start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [mask, cur] = queue[head];
            if (popcount(mask) >= max_vertices)
                continue;
            for (VertexMask m = g.neighbors(cur) & allowed & ~mask; m; m &= m - 1) {
                Vertex w = lowest(m);
                VertexMask next = mask | bit(w);
                if (seen(next, w))
                    continue;
                set(next, w, static_cast<std::int8_t>(cur));
                queue.emplace_back(next, w);
            }
        }
        states_ = std::move(queue);
    }

    bool seen(VertexMask mask, Vertex cur) const { return prev_[index(mask, cur)] != kUnseen; }
    const std::vector<std::pair<VertexMask, Vertex>>& states() const { return states_; }

    VertexPath path_to(VertexMask mask, Vertex cur) const
    {
        VertexPath out;
        for (;;) {
            out.push_back(cur);
            std::int8_t p = prev_[index(mask, cur)];
            if (p == kRoot)
                break;
            mask &= ~bit(cur);
            cur = p;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::int8_t kUnseen = -2;
    static constexpr std::int8_t kRoot = -1;

    std::size_t index(VertexMask mask, Vertex cur) const { return static_cast<std::size_t>(mask) * n_ + cur; }
    void set(VertexMask mask, Vertex cur, std::int8_t p) { prev_[index(mask, cur)] = p; }

    int n_;
    std::vector<std::int8_t> prev_;
    std::vector<std::pair<VertexMask, Vertex>> states_;
};

}  // namespace

std::optional<VertexPath> hamilton_path(const Graph& g)
{
    guard(g, kHamiltonMaxVertices, "hamilton_path");
    const int n = g.order();
    if (n == 0)
        return VertexPath{};
    int leaves = 0;
    for (Vertex v = 0; v < n; ++v)
        leaves += g.degree(v) <= 1 ? 1 : 0;
    if ((n > 1 && leaves > 2) || !is_connected(g))
        return std::nullopt;
    // Low-degree vertices first: a pendant vertex must be an end.
    std::vector<std::pair<int, Vertex>> starts;
    for (Vertex v = 0; v < n; ++v)
        starts.emplace_back(g.degree(v), v);
    std::sort(starts.begin(), starts.end());
    SpanningPathSearch search(g, std::nullopt, std::nullopt);
    for (auto [d, s] : starts)
        if (auto p = search.from(s))
            return p;
    return std::nullopt;
}

std::optional<VertexPath> hamilton_path_between(const Graph& g, Vertex u, Vertex v)
{
    guard(g, kHamiltonMaxVertices, "hamilton_path_between");
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw Error(ErrorCode::SameVertex, "path endpoints coincide");
    SpanningPathSearch search(g, v, std::nullopt);
    return search.from(u);
}

std::optional<VertexPath> hamilton_path_from(const Graph& g, Vertex u)
{
    guard(g, kHamiltonMaxVertices, "hamilton_path_from");
    check_vertex(g, u);
    SpanningPathSearch search(g, std::nullopt, std::nullopt);
    return search.from(u);
}

std::optional<VertexPath> hamilton_cycle_through(const Graph& g, Vertex u)
{
    guard(g, kHamiltonMaxVertices, "hamilton_cycle");
    check_vertex(g, u);
    if (g.order() < 3)
        return std::nullopt;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) < 2)
            return std::nullopt;
    SpanningPathSearch search(g, std::nullopt, u);
    return search.from(u);
}

std::optional<VertexPath> hamilton_cycle(const Graph& g)
{
    guard(g, kHamiltonMaxVertices, "hamilton_cycle");
    if (g.order() < 3)
        return std::nullopt;
    return hamilton_cycle_through(g, 0);
}

std::optional<VertexPath> longest_cycle(const Graph& g)
{
    guard(g, kCycleSearchMaxVertices, "longest_cycle");
    const int n = g.order();
    if (auto c = hamilton_cycle(g))
        return c;
    std::optional<VertexPath> best;
    // Each cycle is found from its smallest vertex s, using only vertices >= s.
    for (Vertex s = 0; s < n; ++s) {
        const VertexMask allowed = all_vertices(n) & ~all_vertices(s);
        if (popcount(allowed) < 3 || (best && popcount(allowed) <= static_cast<int>(best->size())))
            break;
        StateReach reach(g, s, allowed, n);
        for (auto [mask, cur] : reach.states()) {
            int len = popcount(mask);
            if (len >= 3 && g.adjacent(cur, s) && (!best || len > static_cast<int>(best->size())))
                best = reach.path_to(mask, cur);
        }
    }
    return best;
}

bool has_path_of_length(const Graph& g, Vertex u, Vertex v, int len)
{
    guard(g, kCycleSearchMaxVertices, "has_path_of_length");
    check_vertex(g, u);
    check_vertex(g, v);
    if (len < 1 || len > g.order() - 1 || u == v)
        return false;
    StateReach reach(g, u, all_vertices(g.order()), len + 1);
    for (auto [mask, cur] : reach.states())
        if (cur == v && popcount(mask) == len + 1)
            return true;
    return false;
}

VertexPath longest_path(const Graph& g)
{
    guard(g, kHamiltonMaxVertices, "longest_path");
    const int n = g.order();
    if (n == 0)
        return {};
    if (auto p = hamilton_path(g))
        return *p;
    VertexPath best{0};
    for (Vertex s = 0; s < n; ++s) {
        StateReach reach(g, s, all_vertices(n), n);
        for (auto [mask, cur] : reach.states())
            if (popcount(mask) > static_cast<int>(best.size()))
                best = reach.path_to(mask, cur);
    }
    return best;
}

bool is_path_in(const Graph& g, const VertexPath& path)
{
    VertexMask seen = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        Vertex v = path[i];
        if (v < 0 || v >= g.order() || (seen & bit(v)))
            return false;
        seen |= bit(v);
        if (i > 0 && !g.adjacent(path[i - 1], v))
            return false;
    }
    return !path.empty();
}

bool is_cycle_in(const Graph& g, const VertexPath& cycle)
{
    return cycle.size() >= 3 && is_path_in(g, cycle) && g.adjacent(cycle.front(), cycle.back());
}

}  // namespace pc
