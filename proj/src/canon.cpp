#include "pc/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "pc/error.hpp"
#include "pc/graph_io.hpp"

namespace pc {

namespace {

constexpr int kSearchLimit = 16;

using Cells = std::vector<VertexMask>;
using Rows = std::array<std::uint16_t, kSearchLimit>;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), orbits_(g.order()) {}

    void run(Cells cells) { search(std::move(cells)); }

    CanonicalForm result()
    {
        CanonicalForm out;
        out.label = best_label_;
        out.graph = relabel(g_, best_label_);
        out.orbit.resize(n_);
        std::vector<Vertex> smallest(n_, n_);
        for (Vertex v = 0; v < n_; ++v) {
            int r = orbits_.find(v);
            smallest[r] = std::min(smallest[r], v);
        }
        for (Vertex v = 0; v < n_; ++v)
            out.orbit[v] = smallest[orbits_.find(v)];
        return out;
    }

private:
    void refine(Cells& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
                const VertexMask splitter = cells[w];
                for (std::size_t x = 0; x < cells.size(); ++x) {
                    const VertexMask cell = cells[x];
                    if (popcount(cell) == 1)
                        continue;
                    std::array<VertexMask, kSearchLimit + 1> by_count{};
                    int lo = kSearchLimit + 1, hi = -1;
                    for (VertexMask m = cell; m; m &= m - 1) {
                        Vertex v = lowest(m);
                        int c = popcount(g_.neighbors(v) & splitter);
                        by_count[c] |= bit(v);
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    if (lo == hi)
                        continue;
                    Cells pieces;
                    for (int c = lo; c <= hi; ++c)
                        if (by_count[c])
                            pieces.push_back(by_count[c]);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    bool twins(Vertex u, Vertex v) const
    {
        return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
    }

    void leaf(const Cells& cells)
    {
        std::vector<Vertex> label(n_);
        for (int i = 0; i < n_; ++i)
            label[lowest(cells[i])] = i;
        Rows rows{};
        for (Vertex v = 0; v < n_; ++v) {
            std::uint16_t r = 0;
            for (VertexMask m = g_.neighbors(v); m; m &= m - 1)
                r |= static_cast<std::uint16_t>(1U << label[lowest(m)]);
            rows[label[v]] = r;
        }
        if (best_label_.empty() || rows < best_rows_) {
            best_rows_ = rows;
            best_label_ = std::move(label);
            best_inverse_.assign(n_, 0);
            for (Vertex v = 0; v < n_; ++v)
                best_inverse_[best_label_[v]] = v;
        } else if (rows == best_rows_) {
            for (Vertex v = 0; v < n_; ++v)
                orbits_.unite(v, best_inverse_[label[v]]);
        }
    }

    void search(Cells cells)
    {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        VertexMask explored = 0;
        for (VertexMask m = cells[target]; m; m &= m - 1) {
            Vertex v = lowest(m);
            bool pruned = false;
            for (VertexMask e = explored; e; e &= e - 1)
                if (twins(lowest(e), v)) {
                    orbits_.unite(lowest(e), v);
                    pruned = true;
                    break;
                }
            if (pruned)
                continue;
            explored |= bit(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(v));
            child.push_back(cells[target] & ~bit(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            search(std::move(child));
        }
    }

    const Graph& g_;
    int n_;
    UnionFind orbits_;
    Rows best_rows_{};
    std::vector<Vertex> best_label_;
    std::vector<Vertex> best_inverse_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors)
{
    const int n = g.order();
    if (n > kSearchLimit)
        throw Error(ErrorCode::TooLarge, "canonical labeling limited to " + std::to_string(kSearchLimit) + " vertices");
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw Error(ErrorCode::InvalidArgument, "vertex color count differs from vertex count");
    if (n == 0)
        return CanonicalForm{g, {}, {}};

    Cells cells;
    if (colors.empty()) {
        cells.push_back(all_vertices(n));
    } else {
        std::vector<int> distinct(colors.begin(), colors.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int c : distinct) {
            VertexMask cell = 0;
            for (Vertex v = 0; v < n; ++v)
                if (colors[v] == c)
                    cell |= bit(v);
            cells.push_back(cell);
        }
    }
    Canonizer canon(g);
    canon.run(std::move(cells));
    return canon.result();
}

std::string canonical_code(const Graph& g)
{
    if (g.order() > kCanonicalMaxVertices)
        throw Error(ErrorCode::TooLarge, "canonical_code needs n <= " + std::to_string(kCanonicalMaxVertices) +
                                             ", got " + std::to_string(g.order()));
    return to_graph6(canonical_form(g).graph);
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace pc
