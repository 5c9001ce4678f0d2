#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pc/certificate.hpp"
#include "pc/graph.hpp"

namespace pc {

struct SolverOptions {
    std::optional<int> kmax;  // default: the constructive upper bound
    int jobs = 1;
    /// Wall-clock cap for the exhaustive phase. Unset: PC_BUDGET_MS, else none.
    std::optional<std::chrono::milliseconds> budget;
    int max_vertices = 10;
    int max_edges = 24;
    /// Run pc2_pipeline inside pc_upper. Callers that already ran it turn this off.
    bool try_pipeline = true;
};

enum class ExactStatus { Solved, AboveKmax, BudgetExceeded };

std::string_view to_string(ExactStatus s);

struct SearchRecord {
    int k = 0;
    std::uint64_t examined = 0;  // colorings visited
    bool exhausted = false;
};

struct ExactResult {
    ExactStatus status = ExactStatus::Solved;
    int pc = 0;     // valid when Solved
    int lower = 0;  // pc >= lower
    int upper = 0;  // pc <= upper (constructive bound)
    std::optional<PcCertificate> witness;
    std::vector<SearchRecord> searches;
};

/// Verified certificate from the constructions: complete graph, pc2_pipeline,
/// bridge-block gluing, and a BFS spanning tree colored by color_tree. The
/// smallest palette wins.
PcCertificate pc_upper(const Graph& g, bool try_pipeline = true);

/// Outcome of scanning every coloring with k colors up to palette renaming.
struct KSearch {
    std::optional<std::vector<Color>> witness;  // lexicographically least
    std::uint64_t examined = 0;
    bool exhausted = false;  // false only when the deadline hit first
};

/// Colorings in lexicographic restricted-growth order over g.edges(); the
/// proper-walk filter runs before the exact check. With jobs > 1 the space is
/// split into prefix blocks; the reported witness is still the least one.
KSearch search_k_colorings(const Graph& g, int k, int jobs,
                           std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

/// Exact pc: 1 for complete graphs, else the least k in 2..upper whose
/// search finds a coloring, every smaller k having been exhausted.
/// Throws TooLarge when the exhaustive phase is needed beyond the guards.
ExactResult pc_exact(const Graph& g, const SolverOptions& options = {});

struct VerifyReport {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Re-checks every claim of a certificate from scratch.
VerifyReport verify_certificate(const PcCertificate& cert);

}  // namespace pc
