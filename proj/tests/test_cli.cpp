#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "pc/graph.hpp"
#include "pc/graph_io.hpp"
#include "pc/serialize.hpp"

using namespace pc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "pc_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

bool has_line(const std::string& text, const std::string& line)
{
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line)
            return true;
    return false;
}

}  // namespace

TEST_CASE("compute")
{
    auto star = run({"compute", "--graph6", "Cs"});
    CHECK(star.code == cli::kOk);
    CHECK(has_line(star.out, "pc=3"));
    CHECK(has_line(star.out, "status=solved"));

    auto edges = scratch("p4.txt");
    write_text_file(edges.string(), "n 4\n0 1\n1 2\n2 3\n");
    auto path = run({"compute", "--edges", edges.string()});
    CHECK(path.code == cli::kOk);
    CHECK(has_line(path.out, "pc=2"));

    auto f3 = run({"compute", "--graph6", "F{eCG", "--strong"});
    CHECK(f3.code == cli::kOk);
    CHECK(has_line(f3.out, "pc=3"));

    auto witness = scratch("k5.json");
    auto k5 = run({"compute", "--graph6", to_graph6(complete_graph(5)), "--out", witness.string()});
    CHECK(k5.code == cli::kOk);
    CHECK(has_line(k5.out, "pc=1"));
    auto j = Json::parse(read_text_file(witness.string()));
    CHECK(j["certificate"]["k"] == 1);

    auto structured = run({"compute", "--graph6", "Cs", "--format", "structured"});
    auto sj = Json::parse(structured.out);
    CHECK(sj["pc"] == 3);
    CHECK(sj["status"] == "solved");

    auto capped = run({"compute", "--graph6", "Cs", "--kmax", "2"});
    CHECK(capped.code == cli::kOk);
    CHECK(has_line(capped.out, "pc>2"));
}

TEST_CASE("compute input errors")
{
    auto bad = run({"compute", "--graph6", "zz"});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("MalformedGraph6") != std::string::npos);

    CHECK(run({"compute", "--graph6", "Cs", "--edges", "x.txt"}).code == cli::kInputError);
    CHECK(run({"compute"}).code == cli::kInputError);
    CHECK(run({"compute", "--graph6", "C?"}).code == cli::kInputError);  // disconnected
    CHECK(run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("compute budget")
{
    const std::string k19 = to_graph6(star_graph(9));
    ::setenv("PC_BUDGET_MS", "0", 1);
    auto r = run({"compute", "--graph6", k19});
    ::unsetenv("PC_BUDGET_MS");
    CHECK(r.code == cli::kBudgetExceeded);
    CHECK(has_line(r.out, "status=budget_exceeded"));
}

TEST_CASE("verify")
{
    auto good = scratch("c4.json");
    write_text_file(good.string(), R"({"edges":[[0,1],[1,2],[2,3],[0,3]],"colors":[1,2,1,2]})");
    auto ok = run({"verify", "--graph6", to_graph6(cycle_graph(4)), "--coloring", good.string(), "--strong"});
    CHECK(ok.code == cli::kOk);
    CHECK(has_line(ok.out, "ok"));

    auto bad = scratch("p3.json");
    write_text_file(bad.string(), R"({"edges":[[0,1],[1,2]],"colors":[1,1]})");
    auto fail = run({"verify", "--graph6", to_graph6(path_graph(3)), "--coloring", bad.string()});
    CHECK(fail.code == cli::kInputError);
    CHECK(has_line(fail.out, "failing_pair=0,2"));

    auto short_list = scratch("short.json");
    write_text_file(short_list.string(), R"({"colors":[1]})");
    auto mismatch = run({"verify", "--graph6", to_graph6(path_graph(3)), "--coloring", short_list.string()});
    CHECK(mismatch.code == cli::kInputError);
    CHECK(mismatch.err.find("ColoringGraphMismatch") != std::string::npos);

    auto k2 = scratch("k2.json");
    write_text_file(k2.string(), R"({"colors":[1]})");
    CHECK(run({"verify", "--graph6", "A_", "--coloring", k2.string()}).code == cli::kOk);
    CHECK(run({"verify", "--graph6", "A_", "--coloring", k2.string(), "--strong"}).code == cli::kInputError);
}

TEST_CASE("survey")
{
    auto big = run({"survey", "--n", "12..12"});
    CHECK(big.code == cli::kInputError);
    CHECK(big.err.find("TooLarge") != std::string::npos);
    CHECK(run({"survey", "--n", "8..5"}).code == cli::kInputError);
    CHECK(run({"survey", "--n", "five"}).code == cli::kInputError);

    auto report = scratch("main.json");
    auto main = run({"survey", "--n", "5..8", "--out", report.string()});
    CHECK(main.code == cli::kOk);
    CHECK(has_line(main.out, "exceptions=2"));
    CHECK(has_line(main.out, "verdict=confirmed"));
    auto j = Json::parse(read_text_file(report.string()));
    CHECK(j["exceptions"].size() == 2);
    auto sidecar = read_text_file(report.string() + ".exceptions.g6");
    CHECK(sidecar == j["exceptions"][0]["graph6"].get<std::string>() + "\n" +
                         j["exceptions"][1]["graph6"].get<std::string>() + "\n");

    auto bip = run({"survey", "--n", "4..8", "--theorem", "bipartite"});
    CHECK(bip.code == cli::kOk);
    CHECK(has_line(bip.out, "exceptions=0"));
    CHECK(has_line(bip.out, "verdict=confirmed"));

    // A corpus holding only one of the two exceptions still matches the fixtures in range.
    auto corpus = scratch("corpus.g6");
    write_text_file(corpus.string(), sidecar.substr(0, sidecar.find('\n') + 1));
    auto one = run({"survey", "--n", "7..7", "--input", corpus.string()});
    CHECK(one.code == cli::kOk);
    CHECK(has_line(one.out, "exceptions=1"));
}
