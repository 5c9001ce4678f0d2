#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pc/error.hpp"
#include "pc/graph.hpp"
#include "pc/hamilton.hpp"
#include "pc/survey.hpp"
#include "support.hpp"

using namespace pc;
using pc::test::Rng;

namespace {

bool spans(const Graph& g, const VertexPath& p)
{
    VertexMask seen = 0;
    for (Vertex v : p)
        seen |= bit(v);
    return static_cast<int>(p.size()) == g.order() && seen == all_vertices(g.order());
}

/// Hamilton path by trying every vertex order.
bool brute_hamilton_path(const Graph& g)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_path_in(g, perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int brute_longest_cycle(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s)
        test::for_each_simple_path(g, s, [&](const std::vector<Vertex>& p) {
            if (p.size() >= 3 && p.front() == s && g.adjacent(p.back(), s) &&
                *std::min_element(p.begin(), p.end()) == s)
                best = std::max(best, static_cast<int>(p.size()));
        });
    return best;
}

}  // namespace

TEST_CASE("hamilton_path examples")
{
    auto p4 = hamilton_path(path_graph(4));
    REQUIRE(p4);
    CHECK(is_path_in(path_graph(4), *p4));
    CHECK(spans(path_graph(4), *p4));
    CHECK_FALSE(hamilton_path(star_graph(3)));
    CHECK(hamilton_path(Graph(1)));
    CHECK_FALSE(hamilton_path(Graph(2)));
    try {
        hamilton_path(Graph(17));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("hamilton paths with fixed ends")
{
    Graph c4 = cycle_graph(4);
    auto adj = hamilton_path_between(c4, 0, 1);
    REQUIRE(adj);
    CHECK(adj->front() == 0);
    CHECK(adj->back() == 1);
    CHECK(spans(c4, *adj));
    CHECK_FALSE(hamilton_path_between(c4, 0, 2));
    try {
        hamilton_path_between(c4, 1, 1);
        FAIL("expected SameVertex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SameVertex);
    }
    auto from = hamilton_path_from(star_graph(2), 1);
    REQUIRE(from);
    CHECK(from->front() == 1);
    CHECK_FALSE(hamilton_path_from(star_graph(2), 0));
}

TEST_CASE("hamilton cycles")
{
    auto c5 = hamilton_cycle(cycle_graph(5));
    REQUIRE(c5);
    CHECK(is_cycle_in(cycle_graph(5), *c5));
    CHECK_FALSE(hamilton_cycle(path_graph(4)));
    auto through = hamilton_cycle_through(complete_graph(5), 3);
    REQUIRE(through);
    CHECK(through->front() == 3);
    CHECK_FALSE(hamilton_cycle(complete_graph(2)));
}

TEST_CASE("longest cycle and paths of given length")
{
    CHECK_FALSE(longest_cycle(path_graph(6)));
    Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto c = longest_cycle(diamond);
    REQUIRE(c);
    CHECK(c->size() == 4);

    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v)
                for (int len = 1; len <= 3; ++len)
                    CHECK(has_path_of_length(complete_graph(4), u, v, len));
    CHECK_FALSE(has_path_of_length(cycle_graph(4), 0, 2, 3));
    CHECK(has_path_of_length(cycle_graph(4), 0, 2, 2));
    CHECK(has_path_of_length(cycle_graph(4), 0, 1, 1));
    CHECK(longest_path(path_graph(5)).size() == 5);
    CHECK(longest_path(star_graph(4)).size() == 3);
}

TEST_CASE("exact searches agree with permutation brute force")
{
    Rng rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = test::uniform_int(rng, 1, 7);
        Graph g = test::random_graph(rng, n, 0.35 + 0.1 * (trial % 4));
        auto p = hamilton_path(g);
        REQUIRE(p.has_value() == brute_hamilton_path(g));
        if (p) {
            CHECK(is_path_in(g, *p));
            CHECK(spans(g, *p));
        }
        auto c = longest_cycle(g);
        CHECK((c ? static_cast<int>(c->size()) : 0) == brute_longest_cycle(g));
        if (c)
            CHECK(is_cycle_in(g, *c));
        auto lp = longest_path(g);
        CHECK(is_path_in(g, lp));
        if (p)
            CHECK(static_cast<int>(lp.size()) == n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v)
                    continue;
                auto between = hamilton_path_between(g, u, v);
                if (between) {
                    CHECK(between->front() == u);
                    CHECK(between->back() == v);
                    CHECK(spans(g, *between));
                    CHECK(is_path_in(g, *between));
                }
                CHECK(between.has_value() == has_path_of_length(g, u, v, n - 1));
            }
    }
}

TEST_CASE("Dirac-type degree conditions on random graphs")
{
    Rng rng(99);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
        const int n = test::uniform_int(rng, 3, 10);
        Graph g = test::random_graph(rng, n, 0.7);
        const int d = min_degree(g);
        if (2 * d >= n - 1)
            CHECK(hamilton_path(g));
        if (2 * d >= n)
            CHECK(hamilton_cycle(g));
        if (2 * d >= n + 1) {
            ++checked;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    CHECK(hamilton_path_between(g, u, v));
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("Dirac sweep: every class with n <= 8 and 2*delta >= n is Hamiltonian")
{
    for (int n = 3; n <= 8; ++n) {
        GraphFilter f;
        f.min_degree = (n + 1) / 2;
        for (const Graph& g : enumerate_connected(n, f)) {
            auto c = hamilton_cycle(g);
            REQUIRE(c);
            CHECK(is_cycle_in(g, *c));
            CHECK(spans(g, *c));
        }
    }
}

TEST_CASE("panconnectivity sweep: n <= 8 and 2*delta >= n+2")
{
    for (int n = 3; n <= 8; ++n) {
        GraphFilter f;
        f.min_degree = (n + 3) / 2;
        for (const Graph& g : enumerate_connected(n, f))
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    for (int len = 2; len <= n - 1; ++len)
                        REQUIRE(has_path_of_length(g, u, v, len));
    }
}

TEST_CASE("2-connected graphs with n <= 8 have a cycle of length >= min(n, 2*delta)")
{
    for (int n = 3; n <= 8; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            if (connectivity(g) < 2)
                continue;
            auto c = longest_cycle(g);
            REQUIRE(c);
            CHECK(static_cast<int>(c->size()) >= std::min(n, 2 * min_degree(g)));
        }
}
