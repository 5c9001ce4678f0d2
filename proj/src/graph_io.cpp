#include "pc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pc/error.hpp"

namespace pc {

namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

}  // namespace

Graph from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        throw Error(ErrorCode::MalformedGraph6, "empty graph6 string");
    for (char ch : text)
        if (static_cast<unsigned char>(ch) < kOffset || static_cast<unsigned char>(ch) > 126)
            throw Error(ErrorCode::MalformedGraph6, "byte outside 63..126 in \"" + std::string(text) + "\"");
    const int n = static_cast<unsigned char>(text[0]) - kOffset;
    if (n > Graph::kMaxVertices)
        throw Error(ErrorCode::MalformedGraph6, "long-form header not supported: \"" + std::string(text) + "\"");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(1 + bytes) + " bytes for n=" +
                                                   std::to_string(n) + ", got " + std::to_string(text.size()));
    std::vector<VertexMask> rows(n, 0);
    std::size_t k = 0;
    auto bit_at = [&](std::size_t i) {
        int chunk = static_cast<unsigned char>(text[1 + i / 6]) - kOffset;
        return (chunk >> (5 - i % 6)) & 1;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bit_at(k)) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
    for (; k < bytes * 6; ++k)
        if (bit_at(k))
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    return Graph::from_rows(rows);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + kOffset));
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + kOffset));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#' || (t.front() == '>' && !t.starts_with(">>graph6<<")))
            continue;
        out.push_back(from_graph6(t));
    }
    return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs)
{
    for (const Graph& g : graphs)
        out << to_graph6(g) << '\n';
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto t = trim(line);
        if (t.empty())
            continue;
        std::istringstream fields{std::string(t)};
        if (n < 0) {
            std::string key;
            if (!(fields >> key >> n) || key != "n" || n < 0)
                throw Error(ErrorCode::MalformedInput, "edge list must start with \"n <count>\" (line " +
                                                           std::to_string(lineno) + ")");
            continue;
        }
        Vertex u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw Error(ErrorCode::MalformedInput, "bad edge on line " + std::to_string(lineno));
        pairs.emplace_back(u, v);
    }
    if (n < 0)
        throw Error(ErrorCode::MalformedInput, "missing \"n <count>\" header");
    return Graph::from_edge_list(n, pairs);
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    out << contents;
}

}  // namespace pc
