#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pc/certificate.hpp"
#include "pc/graph.hpp"
#include "pc/serialize.hpp"
#include "pc/solver.hpp"

namespace pc {

constexpr int kEnumerateMaxVertices = 9;
constexpr int kLabeledSweepMaxVertices = 7;

struct GraphFilter {
    int min_degree = 0;
    bool bipartite_only = false;
    bool noncomplete = false;
};

bool passes(const Graph& g, const GraphFilter& f);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices passing the filter, sorted by canonical code. Generated by
/// vertex-by-vertex canonical augmentation; 1 <= n <= 9.
std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter = {});

/// Same classes from all 2^(n(n-1)/2) labeled graphs, deduplicated by
/// canonical code. 1 <= n <= 7.
std::vector<Graph> enumerate_connected_labeled(int n, const GraphFilter& filter = {});

enum class Theorem { Main, Bipartite };

std::string_view to_string(Theorem t);

/// ceil(n/4) for the main theorem, ceil((n+6)/8) for the bipartite one.
int degree_threshold(Theorem t, int n);
GraphFilter theorem_filter(Theorem t, int n);

struct SurveyException {
    std::string code;  // canonical graph6
    int n = 0;
    int pc = 0;
    PcCertificate witness;
    std::vector<SearchRecord> searches;
};

struct SurveyUndecided {
    std::string code;
    int n = 0;
    int lower = 0;
    int upper = 0;
    std::string reason;
};

struct SurveyCounts {
    int examined = 0;
    int by_pipeline = 0;
    int by_exact = 0;
};

struct SurveyReport {
    Theorem theorem = Theorem::Main;
    int n_lo = 0;
    int n_hi = 0;
    std::map<int, SurveyCounts> totals;
    std::vector<SurveyException> exceptions;  // canonical-code order within each n
    std::vector<SurveyUndecided> undecided;
    std::map<int, double> seconds;
};

struct SurveyOptions {
    int jobs = 1;
    std::optional<std::chrono::milliseconds> budget;  // per graph, exact phase
    /// External graph6 corpus replacing the built-in enumeration.
    std::optional<std::vector<Graph>> corpus;
};

/// Connected noncomplete graphs with delta >= ceil(n/4): pc2_pipeline first,
/// pc_exact on failure; every graph with pc != 2 is an exception.
/// 5 <= n_lo <= n_hi <= 8, or 9 with a corpus.
SurveyReport survey_main_theorem(int n_lo, int n_hi, const SurveyOptions& options = {});

/// Connected bipartite graphs with delta >= ceil((n+6)/8). 4 <= n_lo <= n_hi <= 9.
SurveyReport survey_bipartite_theorem8(int n_lo, int n_hi, const SurveyOptions& options = {});

/// Stable key order; timing only when asked for.
Json report_to_json(const SurveyReport& report, bool include_timing = true);

/// graph6 lines of the exceptions.
std::string exceptions_sidecar(const SurveyReport& report);

/// Four K_{t,t} blocks; the first vertex of block 0 is joined to the first
/// vertex of each other block. n = 8t.
Graph make_section4_graph(int t);

struct ExceptionalGraphs {
    Graph g1;  // n = 7
    Graph g2;  // n = 8
};

/// Default location of the checked-in exceptions fixture.
std::string default_fixture_path();

/// Reads the fixture written from a survey run. Throws FixturesMissing when
/// the file is absent or does not hold one graph of each order 7 and 8.
ExceptionalGraphs exceptional_graphs(const std::string& path = default_fixture_path());

/// A vertex whose removal leaves exactly three components, each of two
/// vertices forming a triangle with it.
std::optional<Vertex> triangle_hub(const Graph& g);

}  // namespace pc
