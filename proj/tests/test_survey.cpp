#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "pc/canon.hpp"
#include "pc/constructive.hpp"
#include "pc/decompose.hpp"
#include "pc/error.hpp"
#include "pc/graph_io.hpp"
#include "pc/survey.hpp"
#include "support.hpp"

using namespace pc;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

/// Connected classes by labeled sweep, deduplicated with permutation isomorphism.
int oracle_class_count(int n)
{
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1U)
                edges.push_back({slots[i].first, slots[i].second});
        if (test::count_components(n, edges) != 1)
            continue;
        Graph g = Graph::from_edges(n, edges);
        bool seen = false;
        for (const Graph& r : reps)
            if (test::brute_isomorphic(r, g)) {
                seen = true;
                break;
            }
        if (!seen)
            reps.push_back(g);
    }
    return static_cast<int>(reps.size());
}

std::set<std::string> codes_of(const std::vector<Graph>& gs)
{
    std::set<std::string> out;
    for (const Graph& g : gs)
        out.insert(canonical_code(g));
    return out;
}

/// Sizes of the components left after deleting v.
std::multiset<int> split_sizes(const Graph& g, Vertex v)
{
    std::multiset<int> out;
    for (VertexMask c : components(g, all_vertices(g.order()) & ~bit(v)))
        out.insert(popcount(c));
    return out;
}

}  // namespace

TEST_CASE("connected graph counts")
{
    const std::vector<int> expected{1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_connected(n).size() == static_cast<std::size_t>(expected[n - 1]));
    for (int n = 1; n <= 5; ++n)
        CHECK(oracle_class_count(n) == expected[n - 1]);
}

TEST_CASE("labeled sweep and canonical augmentation agree graph for graph")
{
    for (int n = 1; n <= 6; ++n) {
        auto a = enumerate_connected(n);
        auto b = enumerate_connected_labeled(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(canonical_code(a[i]) == canonical_code(b[i]));
    }
    GraphFilter f;
    f.min_degree = 2;
    CHECK(codes_of(enumerate_connected(7, f)) == codes_of(enumerate_connected_labeled(7, f)));
}

TEST_CASE("enumeration order, filters and guards")
{
    auto all = enumerate_connected(6);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(canonical_code(all[i - 1]) < canonical_code(all[i]));
    for (const Graph& g : all)
        CHECK(canonical_code(g) == to_graph6(g));

    GraphFilter bip;
    bip.min_degree = 2;
    bip.bipartite_only = true;
    auto four = enumerate_connected(4, bip);
    REQUIRE(four.size() == 1);
    CHECK(isomorphic(four[0], cycle_graph(4)));

    GraphFilter nc;
    nc.noncomplete = true;
    CHECK(enumerate_connected(5, nc).size() == 20);

    CHECK(code_of([] { enumerate_connected(10); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { enumerate_connected_labeled(8); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { enumerate_connected(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree thresholds")
{
    for (int n = 5; n <= 8; ++n)
        CHECK(degree_threshold(Theorem::Main, n) == 2);
    CHECK(degree_threshold(Theorem::Main, 9) == 3);
    CHECK(degree_threshold(Theorem::Bipartite, 4) == 2);
    CHECK(degree_threshold(Theorem::Bipartite, 10) == 2);
    CHECK(degree_threshold(Theorem::Bipartite, 11) == 3);
    CHECK(degree_threshold(Theorem::Bipartite, 16) == 3);
}

TEST_CASE("main survey finds one exception on 7 vertices and one on 8")
{
    auto low = survey_main_theorem(5, 6);
    CHECK(low.exceptions.empty());
    CHECK(low.undecided.empty());

    auto r = survey_main_theorem(5, 8);
    CHECK(r.undecided.empty());
    REQUIRE(r.exceptions.size() == 2);
    CHECK(r.exceptions[0].n == 7);
    CHECK(r.exceptions[1].n == 8);
    for (const auto& e : r.exceptions) {
        CHECK(e.pc == 3);
        CHECK(verify_certificate(e.witness));
        CHECK(e.witness.k() == 3);
        REQUIRE(!e.searches.empty());
        CHECK(e.searches[0].k == 2);
        CHECK(e.searches[0].exhausted);
    }
    for (int n = 5; n <= 8; ++n) {
        GraphFilter f = theorem_filter(Theorem::Main, n);
        const auto& t = r.totals.at(n);
        CHECK(static_cast<std::size_t>(t.examined) == enumerate_connected(n, f).size());
        CHECK(t.by_pipeline + t.by_exact == t.examined);
    }

    auto fx = exceptional_graphs();
    CHECK(r.exceptions[0].code == canonical_code(fx.g1));
    CHECK(r.exceptions[1].code == canonical_code(fx.g2));
    CHECK(exceptions_sidecar(r) == r.exceptions[0].code + "\n" + r.exceptions[1].code + "\n");
}

TEST_CASE("survey reports are deterministic")
{
    auto a = report_to_json(survey_main_theorem(5, 7), false).dump(2);
    SurveyOptions opts;
    opts.jobs = 3;
    auto b = report_to_json(survey_main_theorem(5, 7, opts), false).dump(2);
    CHECK(a == b);
    CHECK(report_to_json(survey_main_theorem(5, 7), false).dump(2) == a);
    CHECK(report_to_json(survey_main_theorem(5, 5), true).contains("timing"));
    CHECK_FALSE(report_to_json(survey_main_theorem(5, 5), false).contains("timing"));
}

TEST_CASE("external corpus gives the same report as the built-in enumeration")
{
    // Every class twice, under random labels.
    test::Rng rng(7);
    std::vector<Graph> corpus;
    for (const Graph& g : enumerate_connected(7))
        for (int copy = 0; copy < 2; ++copy)
            corpus.push_back(relabel(g, test::random_permutation(rng, 7)));
    SurveyOptions opts;
    opts.corpus = corpus;
    auto ext = report_to_json(survey_main_theorem(7, 7, opts), false);
    auto built = report_to_json(survey_main_theorem(7, 7), false);
    CHECK(ext == built);
}

TEST_CASE("bipartite survey has no exceptions and agrees with the main corpus")
{
    auto r = survey_bipartite_theorem8(4, 8);
    CHECK(r.exceptions.empty());
    CHECK(r.undecided.empty());
    CHECK(r.totals.at(4).examined == 1);
    for (int n = 5; n <= 8; ++n) {
        auto bip = codes_of(enumerate_connected(n, theorem_filter(Theorem::Bipartite, n)));
        auto main = codes_of(enumerate_connected(n, theorem_filter(Theorem::Main, n)));
        for (const auto& c : bip)
            CHECK(main.count(c) == 1);
        CHECK(static_cast<std::size_t>(r.totals.at(n).examined) == bip.size());
    }
    auto fx = exceptional_graphs();
    CHECK_FALSE(is_bipartite(fx.g1));
    CHECK_FALSE(is_bipartite(fx.g2));
}

TEST_CASE("survey range guards")
{
    CHECK(code_of([] { survey_main_theorem(4, 6); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { survey_main_theorem(7, 6); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { survey_main_theorem(5, 9); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { survey_bipartite_theorem8(3, 5); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { survey_bipartite_theorem8(4, 10); }) == ErrorCode::TooLarge);
}

TEST_CASE("four-block family")
{
    Graph g = make_section4_graph(2);
    CHECK(g.order() == 16);
    CHECK(g.size() == 19);
    CHECK(min_degree(g) == 2);
    CHECK(is_connected(g));
    CHECK(find_bridges(g).size() == 3);

    Graph t1 = make_section4_graph(1);
    CHECK(t1.order() == 8);
    CHECK(min_degree(t1) == 1);
    CHECK(is_tree(t1));

    Graph t3 = make_section4_graph(3);
    CHECK(t3.order() == 24);
    CHECK(min_degree(t3) == 3);
}

TEST_CASE("exceptional graphs")
{
    auto fx = exceptional_graphs();
    CHECK(fx.g1.order() == 7);
    CHECK(fx.g2.order() == 8);
    CHECK(min_degree(fx.g1) == 2);
    CHECK(min_degree(fx.g2) == 2);
    for (const Graph* g : {&fx.g1, &fx.g2}) {
        auto r = pc_exact(*g, SolverOptions{.try_pipeline = false});
        CHECK(r.pc == 3);
        CHECK_FALSE(pc2_pipeline(*g));
    }

    auto hub = triangle_hub(fx.g1);
    REQUIRE(hub);
    CHECK(split_sizes(fx.g1, *hub) == std::multiset<int>{2, 2, 2});
    CHECK_FALSE(triangle_hub(fx.g2));
    CHECK(triangle_hub(friendship_graph(3)));

    // The 8-vertex exception also has a cut vertex leaving three components.
    bool three_way = false;
    for (Vertex v = 0; v < 8; ++v)
        three_way = three_way || split_sizes(fx.g2, v) == std::multiset<int>{2, 2, 3};
    CHECK(three_way);
}

TEST_CASE("fixture errors")
{
    CHECK(code_of([] { exceptional_graphs("/nonexistent/exceptions.g6"); }) == ErrorCode::FixturesMissing);
    auto path = std::filesystem::temp_directory_path() / "pc_one_exception.g6";
    {
        std::ofstream out(path);
        out << "# only one graph\n" << to_graph6(exceptional_graphs().g1) << "\n";
    }
    CHECK(code_of([&] { exceptional_graphs(path.string()); }) == ErrorCode::FixturesMissing);
    {
        std::ofstream out(path);
        out << "not graph6 at all\n";
    }
    CHECK(code_of([&] { exceptional_graphs(path.string()); }) == ErrorCode::FixturesMissing);
    std::filesystem::remove(path);
}
