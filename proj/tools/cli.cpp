#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "pc/canon.hpp"
#include "pc/error.hpp"
#include "pc/graph_io.hpp"
#include "pc/serialize.hpp"
#include "pc/solver.hpp"
#include "pc/survey.hpp"

namespace pc::cli {

namespace {

struct GraphSource {
    std::string graph6;
    std::string edges;
    std::string input;
};

void add_source(CLI::App& cmd, GraphSource& src)
{
    auto* g6 = cmd.add_option("--graph6", src.graph6, "graph in graph6");
    auto* el = cmd.add_option("--edges", src.edges, "edge-list file");
    auto* in = cmd.add_option("--input", src.input, "graph6 file, one graph per line");
    g6->excludes(el)->excludes(in);
    el->excludes(in);
}

std::vector<Graph> load_graphs(const GraphSource& src)
{
    if (!src.graph6.empty())
        return {from_graph6(src.graph6)};
    if (!src.edges.empty())
        return {parse_edge_list(read_text_file(src.edges))};
    if (!src.input.empty()) {
        std::istringstream in(read_text_file(src.input));
        return read_graph6_stream(in);
    }
    throw Error(ErrorCode::InvalidArgument, "one of --graph6, --edges or --input is required");
}

std::string coloring_text(const EdgeColoring& c)
{
    std::string out;
    for (int i = 0; i < c.graph().size(); ++i) {
        const Edge& e = c.graph().edges()[i];
        if (!out.empty())
            out += ' ';
        out += std::to_string(e.u) + "-" + std::to_string(e.v) + ":" + std::to_string(c.colors()[i]);
    }
    return out;
}

struct ComputeArgs {
    GraphSource src;
    int kmax = 0;
    bool strong = false;
    int jobs = 1;
    std::string out_path;
    std::string format = "text";
};

int cmd_compute(const ComputeArgs& a, std::ostream& out)
{
    auto graphs = load_graphs(a.src);
    SolverOptions options;
    if (a.kmax > 0)
        options.kmax = a.kmax;
    options.jobs = a.jobs;

    int status = kOk;
    Json all = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        ExactResult r = pc_exact(g, options);
        if (r.witness && a.strong && !r.witness->strong)
            r.witness->strong = has_strong_property(r.witness->coloring);
        if (r.status == ExactStatus::BudgetExceeded)
            status = std::max<int>(status, kBudgetExceeded);

        std::string witness_path;
        if (!a.out_path.empty() && r.witness) {
            witness_path = graphs.size() == 1 ? a.out_path : a.out_path + "." + std::to_string(i);
            write_text_file(witness_path, certificate_to_json(*r.witness).dump(2) + "\n");
        }

        if (a.format == "structured") {
            Json j;
            j["graph6"] = to_graph6(g);
            j["status"] = std::string(to_string(r.status));
            j["pc"] = r.status == ExactStatus::Solved ? Json(r.pc) : Json(nullptr);
            j["lower"] = r.lower;
            j["upper"] = r.upper;
            if (r.witness) {
                j["strategy"] = std::string(to_string(r.witness->strategy));
                j["witness"] = certificate_to_json(*r.witness);
            }
            if (!witness_path.empty())
                j["witness_path"] = witness_path;
            all.push_back(std::move(j));
            continue;
        }
        if (graphs.size() > 1)
            out << "graph=" << to_graph6(g) << "\n";
        switch (r.status) {
        case ExactStatus::Solved:
            out << "pc=" << r.pc << "\n";
            break;
        case ExactStatus::AboveKmax:
            out << "pc>" << (r.lower - 1) << "\n";
            break;
        case ExactStatus::BudgetExceeded:
            out << "pc in [" << r.lower << "," << r.upper << "]\n";
            break;
        }
        out << "status=" << to_string(r.status) << "\n";
        if (r.witness) {
            out << "strategy=" << to_string(r.witness->strategy) << "\n";
            if (a.strong)
                out << "strong=" << (r.witness->strong ? "yes" : "no") << "\n";
            out << "coloring=" << coloring_text(r.witness->coloring) << "\n";
        }
        if (!witness_path.empty())
            out << "witness=" << witness_path << "\n";
    }
    if (a.format == "structured")
        out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return status;
}

struct VerifyArgs {
    GraphSource src;
    std::string coloring;
    bool strong = false;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    auto graphs = load_graphs(a.src);
    if (graphs.size() != 1)
        throw Error(ErrorCode::InvalidArgument, "verify needs exactly one graph");
    Json j;
    try {
        j = Json::parse(read_text_file(a.coloring));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, std::string("coloring file: ") + e.what());
    }
    PcCertificate cert{coloring_from_json(j, graphs[0]), Strategy::Exhaustive, a.strong, false};
    VerifyReport report = verify_certificate(cert);
    std::optional<std::pair<Vertex, Vertex>> pair;
    if (!report && is_connected(cert.graph()) && cert.graph().order() <= kPathSearchMaxVertices) {
        pair = check_proper_connected(cert.coloring).failing_pair;
        if (!pair && a.strong)
            pair = check_strong_property(cert.coloring).failing_pair;
    }
    if (a.format == "structured") {
        Json r;
        r["ok"] = report.ok;
        r["strong_checked"] = a.strong;
        if (!report.ok) {
            r["reason"] = report.reason;
            if (pair)
                r["failing_pair"] = {pair->first, pair->second};
        }
        out << r.dump(2) << "\n";
    } else if (report) {
        out << "ok\n";
    } else {
        out << "fail: " << report.reason << "\n";
        if (pair)
            out << "failing_pair=" << pair->first << "," << pair->second << "\n";
    }
    return report ? kOk : kInputError;
}

struct SurveyArgs {
    std::string range;
    std::string theorem = "main";
    std::string input;
    std::string out_path;
    std::string format = "text";
    int jobs = 1;
};

std::pair<int, int> parse_range(const std::string& text)
{
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            s.size() > 4)
            throw Error(ErrorCode::InvalidArgument, "bad --n range '" + text + "', expected a..b");
        return std::stoi(s);
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int cmd_survey(const SurveyArgs& a, std::ostream& out, std::ostream& err)
{
    auto [lo, hi] = parse_range(a.range);
    SurveyOptions options;
    options.jobs = a.jobs;
    if (!a.input.empty()) {
        std::istringstream in(read_text_file(a.input));
        options.corpus = read_graph6_stream(in);
    }
    const Theorem theorem = a.theorem == "bipartite" ? Theorem::Bipartite : Theorem::Main;
    SurveyReport report =
        theorem == Theorem::Main ? survey_main_theorem(lo, hi, options) : survey_bipartite_theorem8(lo, hi, options);

    if (!a.out_path.empty()) {
        write_text_file(a.out_path, report_to_json(report).dump(2) + "\n");
        write_text_file(a.out_path + ".exceptions.g6", exceptions_sidecar(report));
    }

    std::set<std::string> expected;
    if (theorem == Theorem::Main) {
        ExceptionalGraphs fixtures = exceptional_graphs();
        for (const Graph* g : {&fixtures.g1, &fixtures.g2})
            if (g->order() >= lo && g->order() <= hi)
                expected.insert(canonical_code(*g));
    }
    std::set<std::string> found;
    for (const auto& e : report.exceptions)
        found.insert(e.code);

    int status = kOk;
    std::string verdict = "confirmed";
    if (found != expected) {
        status = kContradiction;
        verdict = "contradiction";
    } else if (!report.undecided.empty()) {
        status = kBudgetExceeded;
        verdict = "inconclusive";
    }

    if (a.format == "structured") {
        Json j = report_to_json(report, false);
        j["verdict"] = verdict;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [n, c] : report.totals)
            out << "n=" << n << " examined=" << c.examined << " pipeline=" << c.by_pipeline
                << " exact=" << c.by_exact << "\n";
        for (const auto& e : report.exceptions)
            out << "exception " << e.code << " n=" << e.n << " pc=" << e.pc << "\n";
        for (const auto& u : report.undecided)
            out << "undecided " << u.code << " n=" << u.n << " bounds=" << u.lower << ".." << u.upper << " ("
                << u.reason << ")\n";
        out << "exceptions=" << report.exceptions.size() << "\n";
        out << "verdict=" << verdict << "\n";
    }
    if (status == kContradiction)
        err << "survey exceptions differ from the checked-in fixtures\n";
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Proper connection number toolkit", "pc"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "exact pc with a verified witness");
    add_source(*c, compute.src);
    c->add_option("--kmax", compute.kmax, "largest k to search")->check(CLI::Range(1, kMaxPaletteSize));
    c->add_flag("--strong", compute.strong, "report whether the witness is strong");
    c->add_option("--jobs", compute.jobs, "worker threads")->check(CLI::Range(1, 256));
    c->add_option("--out", compute.out_path, "write the witness certificate here");
    c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "structured"}));

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check a coloring");
    add_source(*v, verify.src);
    v->add_option("--coloring", verify.coloring, "coloring JSON")->required();
    v->add_flag("--strong", verify.strong, "also require the strong property");
    v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "structured"}));

    SurveyArgs survey;
    auto* s = app.add_subcommand("survey", "exhaustive theorem check");
    s->add_option("--n", survey.range, "vertex range a..b")->required();
    s->add_option("--theorem", survey.theorem)->check(CLI::IsMember({"main", "bipartite"}));
    s->add_option("--input", survey.input, "graph6 corpus instead of built-in enumeration");
    s->add_option("--out", survey.out_path, "report path (exceptions go to <path>.exceptions.g6)");
    s->add_option("--format", survey.format)->check(CLI::IsMember({"text", "structured"}));
    s->add_option("--jobs", survey.jobs, "worker threads")->check(CLI::Range(1, 256));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (c->parsed())
            return cmd_compute(compute, out);
        if (v->parsed())
            return cmd_verify(verify, out);
        return cmd_survey(survey, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace pc::cli
