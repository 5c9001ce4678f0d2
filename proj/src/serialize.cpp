#include "pc/serialize.hpp"

#include <algorithm>
#include <string>

#include "pc/error.hpp"

namespace pc {

Json coloring_to_json(const EdgeColoring& c)
{
    Json j;
    j["n"] = c.graph().order();
    j["k"] = c.k();
    Json edges = Json::array();
    for (const Edge& e : c.graph().edges())
        edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    j["colors"] = c.colors();
    return j;
}

Json certificate_to_json(const PcCertificate& cert)
{
    Json j = coloring_to_json(cert.coloring);
    j["certificate"] = {
        {"k", cert.k()},
        {"strategy", std::string(to_string(cert.strategy))},
        {"strong", cert.strong},
        {"verified", cert.verified},
    };
    return j;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::vector<std::pair<Vertex, Vertex>> read_edges(const Json& j)
{
    if (!j.is_array())
        malformed("\"edges\" must be an array");
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            malformed("each edge must be a pair of integers");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

std::vector<Color> read_colors(const Json& j)
{
    if (!j.contains("colors") || !j["colors"].is_array())
        malformed("missing \"colors\" array");
    std::vector<Color> out;
    for (const auto& c : j["colors"]) {
        if (!c.is_number_integer())
            malformed("colors must be integers");
        out.push_back(c.get<int>());
    }
    return out;
}

int read_k(const Json& j, const std::vector<Color>& colors)
{
    if (j.contains("k")) {
        if (!j["k"].is_number_integer())
            malformed("\"k\" must be an integer");
        return j["k"].get<int>();
    }
    int k = 1;
    for (Color c : colors)
        k = std::max(k, c);
    return k;
}

}  // namespace

EdgeColoring coloring_from_json(const Json& j, const Graph& g)
{
    if (!j.is_object())
        malformed("coloring must be a JSON object");
    if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != g.order()))
        throw Error(ErrorCode::ColoringGraphMismatch, "coloring is for a graph of a different order");
    std::vector<Color> colors = read_colors(j);
    const int k = read_k(j, colors);
    if (!j.contains("edges"))
        return EdgeColoring(g, k, std::move(colors));

    auto pairs = read_edges(j["edges"]);
    if (pairs.size() != colors.size() || static_cast<int>(pairs.size()) != g.size())
        throw Error(ErrorCode::ColoringGraphMismatch, std::to_string(pairs.size()) + " edges and " +
                                                          std::to_string(colors.size()) + " colors for a graph with " +
                                                          std::to_string(g.size()) + " edges");
    std::vector<Color> ordered(g.size(), 0);
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw Error(ErrorCode::ColoringGraphMismatch, "edge endpoint out of range");
        auto idx = g.edge_index(u, v);
        if (!idx || seen[*idx])
            throw Error(ErrorCode::ColoringGraphMismatch,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the graph");
        seen[*idx] = true;
        ordered[*idx] = colors[i];
    }
    return EdgeColoring(g, k, std::move(ordered));
}

PcCertificate certificate_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges"))
        malformed("certificate needs \"n\" and \"edges\"");
    const int n = j["n"].get<int>();
    if (n < 0 || n > Graph::kMaxVertices)
        malformed("vertex count out of range");
    Graph g = Graph::from_edge_list(n, read_edges(j["edges"]));
    EdgeColoring c = coloring_from_json(j, g);
    Strategy strategy = Strategy::Exhaustive;
    StrongClaim claim = StrongClaim::None;
    if (j.contains("certificate")) {
        const Json& meta = j["certificate"];
        if (meta.contains("strategy")) {
            auto s = strategy_from_string(meta["strategy"].get<std::string>());
            if (!s)
                malformed("unknown strategy " + meta["strategy"].get<std::string>());
            strategy = *s;
        }
        if (meta.value("strong", false))
            claim = StrongClaim::Required;
    }
    return certify(std::move(c), strategy, claim);
}

}  // namespace pc
