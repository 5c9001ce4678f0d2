#include "pc/certificate.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pc/error.hpp"

namespace pc {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 10> kStrategyNames{{
    {Strategy::Complete, "complete"},
    {Strategy::HamiltonPath, "hamilton_path"},
    {Strategy::Tree, "tree"},
    {Strategy::BipartiteBridgeless, "bipartite_bridgeless"},
    {Strategy::Bridgeless3, "bridgeless_3"},
    {Strategy::Glue, "glue"},
    {Strategy::Extend, "extend"},
    {Strategy::SubstructureS, "substructure_S"},
    {Strategy::Pipeline, "pipeline"},
    {Strategy::Exhaustive, "exhaustive"},
}};

}  // namespace

std::string_view to_string(Strategy s)
{
    for (auto [value, name] : kStrategyNames)
        if (value == s)
            return name;
    return "unknown";
}

std::optional<Strategy> strategy_from_string(std::string_view name)
{
    for (auto [value, n] : kStrategyNames)
        if (n == name)
            return value;
    return std::nullopt;
}

PcCertificate certify(EdgeColoring coloring, Strategy strategy, StrongClaim strong)
{
    if (!is_connected(coloring.graph()))
        throw Error(ErrorCode::Disconnected, "certificate graph is disconnected");
    PairCheck proper = check_proper_connected(coloring);
    if (!proper.ok)
        throw Error(ErrorCode::VerificationFailed,
                    std::string(to_string(strategy)) + " coloring leaves pair (" +
                        std::to_string(proper.failing_pair->first) + "," + std::to_string(proper.failing_pair->second) +
                        ") without a proper path");
    bool is_strong = false;
    if (strong != StrongClaim::None) {
        is_strong = has_strong_property(coloring);
        if (strong == StrongClaim::Required && !is_strong)
            throw Error(ErrorCode::VerificationFailed,
                        std::string(to_string(strategy)) + " coloring lacks the strong property");
    }
    return PcCertificate{std::move(coloring), strategy, is_strong, true};
}

PcCertificate relabel_certificate(const PcCertificate& cert, std::span<const Vertex> labels)
{
    const Graph& g = cert.graph();
    Graph h = relabel(g, labels);
    std::vector<Color> colors(h.size());
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        colors[*h.edge_index(labels[e.u], labels[e.v])] = cert.coloring.colors()[i];
    }
    PcCertificate out = cert;
    out.coloring = EdgeColoring(std::move(h), cert.k(), std::move(colors));
    return out;
}

PcCertificate lift_certificate(const PcCertificate& cert, const Graph& g, std::span<const Vertex> labels,
                               Strategy strategy)
{
    const Graph& sub = cert.graph();
    if (static_cast<int>(labels.size()) != sub.order())
        throw Error(ErrorCode::InvalidArgument, "label map size differs from certificate order");
    VertexMask image = 0;
    for (Vertex v : labels)
        image |= bit(v);
    if (image != all_vertices(g.order()) || sub.order() != g.order())
        throw Error(ErrorCode::InvalidArgument, "lifted certificate must span the target graph");
    std::vector<Color> colors(g.size(), 1);
    for (int i = 0; i < sub.size(); ++i) {
        const Edge& e = sub.edges()[i];
        auto idx = g.edge_index(labels[e.u], labels[e.v]);
        if (!idx)
            throw Error(ErrorCode::InvalidArgument, "certificate edge missing from target graph");
        colors[*idx] = cert.coloring.colors()[i];
    }
    return certify(EdgeColoring(g, cert.k(), std::move(colors)), strategy);
}

ColoredSubgraph colored_subgraph(std::span<const ColoredEdge> edges, int k)
{
    std::map<Vertex, Vertex> local;
    for (const auto& ce : edges) {
        local.emplace(ce.edge.u, 0);
        local.emplace(ce.edge.v, 0);
    }
    std::vector<Vertex> labels;
    for (auto& [global, l] : local) {
        l = static_cast<Vertex>(labels.size());
        labels.push_back(global);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& ce : edges)
        pairs.emplace_back(local[ce.edge.u], local[ce.edge.v]);
    Graph g = Graph::from_edge_list(static_cast<int>(labels.size()), pairs);
    std::vector<Color> colors(g.size(), 1);
    for (const auto& ce : edges)
        colors[*g.edge_index(local[ce.edge.u], local[ce.edge.v])] = ce.color;
    return {EdgeColoring(std::move(g), k, std::move(colors)), std::move(labels)};
}

}  // namespace pc
