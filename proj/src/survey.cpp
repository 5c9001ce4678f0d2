#include "pc/survey.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "pc/canon.hpp"
#include "pc/constructive.hpp"
#include "pc/decompose.hpp"
#include "pc/error.hpp"
#include "pc/graph_io.hpp"

#ifndef PC_DATA_DIR
#define PC_DATA_DIR "data"
#endif

namespace pc {

bool passes(const Graph& g, const GraphFilter& f)
{
    if (!is_connected(g))
        return false;
    if (f.noncomplete && is_complete(g))
        return false;
    if (g.order() > 0 && min_degree(g) < f.min_degree)
        return false;
    if (f.bipartite_only && !is_bipartite(g))
        return false;
    return true;
}

namespace {

void check_enumeration_order(int n, int limit)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "enumeration needs n >= 1");
    if (n > limit)
        throw Error(ErrorCode::TooLarge, "built-in enumeration needs n <= " + std::to_string(limit) + ", got " +
                                             std::to_string(n));
}

std::vector<Graph> sorted_by_code(std::map<std::string, Graph> classes, const GraphFilter& filter)
{
    std::vector<Graph> out;
    for (auto& [code, g] : classes)
        if (passes(g, filter))
            out.push_back(std::move(g));
    return out;
}

Graph with_new_vertex(const Graph& parent, VertexMask neighbors)
{
    const int n = parent.order();
    std::vector<VertexMask> rows(parent.rows().begin(), parent.rows().end());
    rows.push_back(neighbors);
    for (Vertex v : members(neighbors))
        rows[v] |= bit(n);
    return Graph::from_rows(rows);
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter)
{
    check_enumeration_order(n, kEnumerateMaxVertices);
    // All graphs (connected or not) level by level; bipartiteness survives
    // vertex deletion, so it prunes early.
    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::vector<Graph> next;
        for (const Graph& parent : level) {
            std::set<std::string> seen;
            const int p = parent.order();
            for (VertexMask s = 0; s < bit(p); ++s) {
                Graph child = with_new_vertex(parent, s);
                if (filter.bipartite_only && !is_bipartite(child))
                    continue;
                CanonicalForm cf = canonical_form(child);
                Vertex last = static_cast<Vertex>(
                    std::find(cf.label.begin(), cf.label.end(), order - 1) - cf.label.begin());
                if (cf.orbit[p] != cf.orbit[last])
                    continue;
                std::string code = to_graph6(cf.graph);
                if (seen.insert(code).second)
                    next.push_back(std::move(cf.graph));
            }
        }
        level = std::move(next);
    }
    std::map<std::string, Graph> classes;
    for (Graph& g : level) {
        std::string code = to_graph6(g);
        classes.emplace(std::move(code), std::move(g));
    }
    return sorted_by_code(std::move(classes), filter);
}

std::vector<Graph> enumerate_connected_labeled(int n, const GraphFilter& filter)
{
    check_enumeration_order(n, kLabeledSweepMaxVertices);
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            slots.emplace_back(u, v);
    std::map<std::string, Graph> classes;
    const std::uint64_t count = std::uint64_t{1} << slots.size();
    std::vector<VertexMask> rows(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1U) {
                rows[slots[i].first] |= bit(slots[i].second);
                rows[slots[i].second] |= bit(slots[i].first);
            }
        Graph g = Graph::from_rows(rows);
        if (!passes(g, filter))
            continue;
        CanonicalForm cf = canonical_form(g);
        std::string code = to_graph6(cf.graph);
        classes.emplace(std::move(code), std::move(cf.graph));
    }
    return sorted_by_code(std::move(classes), filter);
}

std::string_view to_string(Theorem t) { return t == Theorem::Main ? "main" : "bipartite"; }

int degree_threshold(Theorem t, int n) { return t == Theorem::Main ? (n + 3) / 4 : (n + 6 + 7) / 8; }

GraphFilter theorem_filter(Theorem t, int n)
{
    GraphFilter f;
    f.min_degree = degree_threshold(t, n);
    f.noncomplete = t == Theorem::Main;
    f.bipartite_only = t == Theorem::Bipartite;
    return f;
}

namespace {

struct Outcome {
    bool by_pipeline = false;
    std::optional<ExactResult> exact;
    std::string error;
};

Outcome examine(const Graph& g, const SurveyOptions& options)
{
    Outcome out;
    if (pc2_pipeline(g)) {
        out.by_pipeline = true;
        return out;
    }
    SolverOptions so;
    so.try_pipeline = false;
    so.budget = options.budget;
    try {
        out.exact = pc_exact(g, so);
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<Graph> corpus_slice(const std::vector<Graph>& corpus, int n, const GraphFilter& filter)
{
    std::map<std::string, Graph> classes;
    for (const Graph& g : corpus) {
        if (g.order() != n || !passes(g, filter))
            continue;
        CanonicalForm cf = canonical_form(g);
        std::string code = to_graph6(cf.graph);
        classes.emplace(std::move(code), std::move(cf.graph));
    }
    std::vector<Graph> out;
    for (auto& [code, g] : classes)
        out.push_back(std::move(g));
    return out;
}

SurveyReport run_survey(Theorem theorem, int n_lo, int n_hi, int floor, int ceiling, const SurveyOptions& options)
{
    if (n_hi > ceiling)
        throw Error(ErrorCode::TooLarge, std::string(to_string(theorem)) + " survey supports n <= " +
                                             std::to_string(ceiling) + ", got " + std::to_string(n_hi));
    if (n_lo < floor || n_lo > n_hi)
        throw Error(ErrorCode::InvalidArgument, std::string(to_string(theorem)) + " survey needs " +
                                                    std::to_string(floor) + " <= n_lo <= n_hi");
    SurveyReport report;
    report.theorem = theorem;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const GraphFilter filter = theorem_filter(theorem, n);
        std::vector<Graph> graphs =
            options.corpus ? corpus_slice(*options.corpus, n, filter) : enumerate_connected(n, filter);

        std::vector<Outcome> outcomes(graphs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < graphs.size(); i = next++)
                outcomes[i] = examine(graphs[i], options);
        };
        const int jobs = std::max(1, options.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }

        SurveyCounts& counts = report.totals[n];
        counts.examined = static_cast<int>(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Outcome& o = outcomes[i];
            const std::string code = to_graph6(graphs[i]);
            if (o.by_pipeline) {
                ++counts.by_pipeline;
                continue;
            }
            if (!o.exact) {
                report.undecided.push_back({code, n, 2, 0, o.error});
                continue;
            }
            const ExactResult& r = *o.exact;
            if (r.status != ExactStatus::Solved) {
                report.undecided.push_back({code, n, r.lower, r.upper, std::string(to_string(r.status))});
                continue;
            }
            ++counts.by_exact;
            if (r.pc == 2)
                continue;
            if (auto check = verify_certificate(*r.witness); !check)
                throw Error(ErrorCode::VerificationFailed, "witness for " + code + ": " + check.reason);
            report.exceptions.push_back({code, n, r.pc, *r.witness, r.searches});
        }
        report.seconds[n] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

}  // namespace

SurveyReport survey_main_theorem(int n_lo, int n_hi, const SurveyOptions& options)
{
    return run_survey(Theorem::Main, n_lo, n_hi, 5, options.corpus ? 9 : 8, options);
}

SurveyReport survey_bipartite_theorem8(int n_lo, int n_hi, const SurveyOptions& options)
{
    return run_survey(Theorem::Bipartite, n_lo, n_hi, 4, 9, options);
}

Json report_to_json(const SurveyReport& report, bool include_timing)
{
    Json j;
    j["theorem"] = std::string(to_string(report.theorem));
    j["n_range"] = {report.n_lo, report.n_hi};
    j["filter"] = {
        {"connected", true},
        {"noncomplete", report.theorem == Theorem::Main},
        {"bipartite", report.theorem == Theorem::Bipartite},
        {"min_degree", report.theorem == Theorem::Main ? "ceil(n/4)" : "ceil((n+6)/8)"},
    };
    Json totals = Json::object();
    for (const auto& [n, c] : report.totals)
        totals[std::to_string(n)] = {
            {"min_degree", degree_threshold(report.theorem, n)},
            {"examined", c.examined},
            {"by_pipeline", c.by_pipeline},
            {"by_exact", c.by_exact},
        };
    j["totals"] = std::move(totals);
    Json exceptions = Json::array();
    for (const auto& e : report.exceptions) {
        Json searches = Json::array();
        for (const auto& s : e.searches)
            searches.push_back({{"k", s.k}, {"examined", s.examined}, {"exhausted", s.exhausted}});
        exceptions.push_back({
            {"graph6", e.code},
            {"n", e.n},
            {"pc", e.pc},
            {"searches", std::move(searches)},
            {"witness", certificate_to_json(e.witness)},
        });
    }
    j["exceptions"] = std::move(exceptions);
    Json undecided = Json::array();
    for (const auto& u : report.undecided)
        undecided.push_back(
            {{"graph6", u.code}, {"n", u.n}, {"lower", u.lower}, {"upper", u.upper}, {"reason", u.reason}});
    j["undecided"] = std::move(undecided);
    if (include_timing) {
        Json timing = Json::object();
        for (const auto& [n, s] : report.seconds)
            timing[std::to_string(n)] = s;
        j["timing"] = std::move(timing);
    }
    return j;
}

std::string exceptions_sidecar(const SurveyReport& report)
{
    std::string out;
    for (const auto& e : report.exceptions)
        out += e.code + "\n";
    return out;
}

Graph make_section4_graph(int t)
{
    if (t < 1)
        throw Error(ErrorCode::InvalidArgument, "part size must be at least 1");
    const int block = 2 * t;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int b = 0; b < 4; ++b) {
        const Vertex base = b * block;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                edges.emplace_back(base + i, base + t + j);
        if (b > 0)
            edges.emplace_back(0, base);
    }
    return Graph::from_edge_list(4 * block, edges);
}

std::string default_fixture_path() { return std::string(PC_DATA_DIR) + "/exceptions_main.g6"; }

ExceptionalGraphs exceptional_graphs(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::FixturesMissing, "no exceptions fixture at " + path + "; run the main survey first");
    std::vector<Graph> graphs;
    try {
        graphs = read_graph6_stream(in);
    } catch (const Error& e) {
        throw Error(ErrorCode::FixturesMissing, std::string("unreadable exceptions fixture: ") + e.what());
    }
    std::optional<Graph> g1, g2;
    for (Graph& g : graphs) {
        if (g.order() == 7 && !g1)
            g1 = std::move(g);
        else if (g.order() == 8 && !g2)
            g2 = std::move(g);
        else
            throw Error(ErrorCode::FixturesMissing, "exceptions fixture holds an unexpected graph");
    }
    if (!g1 || !g2)
        throw Error(ErrorCode::FixturesMissing, "exceptions fixture needs one graph on 7 and one on 8 vertices");
    return {std::move(*g1), std::move(*g2)};
}

std::optional<Vertex> triangle_hub(const Graph& g)
{
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        auto parts = components(g, all_vertices(n) & ~bit(v));
        if (parts.size() != 3)
            continue;
        bool ok = true;
        for (VertexMask p : parts) {
            if (popcount(p) != 2) {
                ok = false;
                break;
            }
            Vertex a = lowest(p), b = lowest(p & (p - 1));
            ok = ok && g.adjacent(a, b) && g.adjacent(a, v) && g.adjacent(b, v);
        }
        if (ok)
            return v;
    }
    return std::nullopt;
}

}  // namespace pc
