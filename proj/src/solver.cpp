#include "pc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

#include "pc/coloring_odometer.hpp"
#include "pc/constructive.hpp"
#include "pc/error.hpp"

namespace pc {

std::string_view to_string(ExactStatus s)
{
    switch (s) {
    case ExactStatus::Solved:
        return "solved";
    case ExactStatus::AboveKmax:
        return "above_kmax";
    case ExactStatus::BudgetExceeded:
        return "budget_exceeded";
    }
    return "unknown";
}

namespace {

void require_solvable(const Graph& g)
{
    if (g.order() < 2)
        throw Error(ErrorCode::InvalidArgument, "pc needs at least two vertices");
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "pc is defined for connected graphs only");
}

PcCertificate bfs_tree_certificate(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> tree;
    VertexMask seen = bit(0);
    std::vector<Vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : members(g.neighbors(v) & ~seen)) {
            seen |= bit(w);
            tree.push_back({std::min(v, w), std::max(v, w)});
            queue.push_back(w);
        }
    }
    std::vector<Vertex> identity(n);
    for (Vertex v = 0; v < n; ++v)
        identity[v] = v;
    return lift_certificate(color_tree(Graph::from_edges(n, tree)), g, identity, Strategy::Tree);
}

std::optional<std::chrono::milliseconds> budget_from_env()
{
    const char* raw = std::getenv("PC_BUDGET_MS");
    if (!raw || !*raw)
        return std::nullopt;
    char* end = nullptr;
    long long ms = std::strtoll(raw, &end, 10);
    if (*end != '\0' || ms < 0)
        throw Error(ErrorCode::InvalidArgument, std::string("PC_BUDGET_MS is not a millisecond count: ") + raw);
    return std::chrono::milliseconds(ms);
}

}  // namespace

PcCertificate pc_upper(const Graph& g, bool try_pipeline)
{
    require_solvable(g);
    if (is_complete(g))
        return certify(EdgeColoring::uniform(g, 1), Strategy::Complete);
    if (try_pipeline && g.order() <= kPipelineMaxVertices)
        if (auto cert = pc2_pipeline(g))
            return std::move(*cert);

    PcCertificate best = bfs_tree_certificate(g);
    if (g.order() <= kPipelineMaxVertices)
        if (auto glued = color_by_bridge_blocks(g, kMaxPaletteSize); glued && glued->k() < best.k())
            best = std::move(*glued);
    return best;
}

KSearch search_k_colorings(const Graph& g, int k, int jobs,
                           std::optional<std::chrono::steady_clock::time_point> deadline)
{
    const int m = g.size();
    jobs = std::max(jobs, 1);

    // Prefix blocks, in lexicographic order.
    int prefix_len = 0;
    std::vector<std::vector<Color>> blocks{{}};
    if (jobs > 1) {
        while (prefix_len < m && static_cast<int>(blocks.size()) < 8 * jobs)
            blocks = renaming_classes(++prefix_len, k);
    }
    const int count = static_cast<int>(blocks.size());

    std::vector<std::optional<std::vector<Color>>> found(count);
    std::vector<char> completed(count, 0);
    std::atomic<int> next_block{0};
    std::atomic<int> best_block{std::numeric_limits<int>::max()};
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> examined{0};

    auto worker = [&] {
        ProperPathSearch search(g);
        std::uint64_t local = 0;
        for (;;) {
            const int b = next_block.fetch_add(1);
            if (b >= count || timed_out.load())
                break;
            if (b > best_block.load())
                continue;
            ColoringOdometer odo(m, k, true, blocks[b]);
            bool aborted = false;
            do {
                if ((++local & 4095U) == 0) {
                    if (deadline && std::chrono::steady_clock::now() >= *deadline) {
                        timed_out = true;
                        aborted = true;
                        break;
                    }
                    if (best_block.load() < b) {
                        aborted = true;
                        break;
                    }
                }
                search.set_colors(odo.current(), k);
                if (!search.walk_connected())
                    continue;
                if (search.proper_connected().ok) {
                    found[b] = odo.current();
                    int seen = best_block.load();
                    while (b < seen && !best_block.compare_exchange_weak(seen, b)) {
                    }
                    break;
                }
            } while (odo.next());
            if (!aborted)
                completed[b] = 1;
            if (timed_out.load())
                break;
        }
        examined += local;
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    KSearch out;
    out.examined = examined.load();
    for (int b = 0; b < count; ++b) {
        if (found[b]) {
            out.witness = found[b];
            out.exhausted = true;
            return out;
        }
        if (!completed[b]) {
            out.exhausted = false;
            return out;
        }
    }
    out.exhausted = true;
    return out;
}

ExactResult pc_exact(const Graph& g, const SolverOptions& options)
{
    require_solvable(g);
    ExactResult r;
    if (is_complete(g)) {
        r.pc = r.lower = r.upper = 1;
        r.witness = certify(EdgeColoring::uniform(g, 1), Strategy::Complete);
        if (options.kmax && *options.kmax < 1) {
            r.status = ExactStatus::AboveKmax;
            r.witness.reset();
        }
        return r;
    }

    PcCertificate upper = pc_upper(g, options.try_pipeline);
    r.upper = upper.k();
    r.lower = 2;
    const int kmax = options.kmax.value_or(r.upper);
    const int last = std::min(r.upper - 1, kmax);

    if (last >= 2 && (g.order() > options.max_vertices || g.size() > options.max_edges))
        throw Error(ErrorCode::TooLarge, "exhaustive search needs n <= " + std::to_string(options.max_vertices) +
                                             " and m <= " + std::to_string(options.max_edges) + ", got n=" +
                                             std::to_string(g.order()) + " m=" + std::to_string(g.size()));

    const auto budget = options.budget ? options.budget : budget_from_env();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget)
        deadline = std::chrono::steady_clock::now() + *budget;

    for (int k = 2; k <= last; ++k) {
        KSearch s = search_k_colorings(g, k, options.jobs, deadline);
        r.searches.push_back({k, s.examined, s.exhausted});
        if (s.witness) {
            r.pc = r.lower = r.upper = k;
            r.witness = certify(EdgeColoring(g, k, std::move(*s.witness)), Strategy::Exhaustive);
            return r;
        }
        if (!s.exhausted) {
            r.status = ExactStatus::BudgetExceeded;
            return r;
        }
        r.lower = k + 1;
    }
    if (r.upper <= kmax) {
        r.pc = r.lower = r.upper;
        r.witness = std::move(upper);
        return r;
    }
    r.status = ExactStatus::AboveKmax;
    r.lower = std::max(r.lower, kmax + 1);
    return r;
}

VerifyReport verify_certificate(const PcCertificate& cert)
{
    const EdgeColoring& c = cert.coloring;
    const Graph& g = c.graph();
    if (g.order() < 2)
        return {false, "graph has fewer than two vertices"};
    if (!is_connected(g))
        return {false, "graph is disconnected"};
    if (g.order() > kPathSearchMaxVertices)
        return {false, "graph too large for the checker"};
    if (c.colors_used() > c.k())
        return {false, "more colors used than the palette allows"};
    auto proper = check_proper_connected(c);
    if (!proper.ok)
        return {false, "no proper path between " + std::to_string(proper.failing_pair->first) + " and " +
                           std::to_string(proper.failing_pair->second)};
    if (cert.strong) {
        auto strong = check_strong_property(c);
        if (!strong.ok)
            return {false, "strong property fails for " + std::to_string(strong.failing_pair->first) + " and " +
                               std::to_string(strong.failing_pair->second)};
    }
    return {};
}

}  // namespace pc
