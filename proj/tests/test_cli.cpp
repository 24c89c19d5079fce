#include "labelkit/cli.hpp"
#include "labelkit/edge_list.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace labelkit;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r)
{
    return nlohmann::json::parse(r.out);
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("labelkit-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const Graph& g) const
    {
        return write_text(name, serialize(g));
    }
    std::string write_text(const std::string& name, const std::string& text) const
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

} // namespace

TEST_CASE("cli examples")
{
    Scratch s;
    const std::string p4 = s.write("p4.el", graphs::path(4));
    const std::string k8 = s.write("k8.el", graphs::complete(8));

    const Result rt = run({"label", "roundtrip", p4});
    CHECK(rt.code == 0);
    CHECK(json_of(rt)["status"] == "ok");

    const Result good = run({"good", "check", k8, "--f", "log", "--c", "1"});
    CHECK(good.code == 0);
    const auto gj = json_of(good);
    CHECK(gj["verdict"] == "violated");
    CHECK(gj.contains("witness"));
    CHECK(gj["witness"]["vertices"].size() == 7);

    CHECK(run({"label", "decode", "zz", "zz", "--n", "4", "--k", "1"}).code == 2);
}

TEST_CASE("exit codes")
{
    Scratch s;
    const std::string bad = s.write_text("bad.el", "n 3\ne 0 5\n");
    const std::string ok = s.write("c5.el", graphs::cycle(5));
    CHECK(run({}).code == 2);
    CHECK(run({"graph"}).code == 2);
    CHECK(run({"graph", "info", ok, "--bogus"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"graph", "info", bad}).code == 1);
    CHECK(run({"graph", "info", s.path("missing.el")}).code == 1);
    CHECK(run({"good", "threshold", "--k", "9", "--n", "4", "--f", "log", "--c", "1"}).code == 1);
    CHECK(run({"decent", "constants", "--delta", "0.5", "--C", "1", "--s", "2", "--gamma", "1"}).code == 1);
    CHECK(run({"label", "decode", "40", "4000", "--n", "4", "--k", "1"}).code == 1);
    const Result e = run({"graph", "info", bad});
    CHECK(e.out.empty());
    CHECK_FALSE(e.err.empty());
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("registry covers every library operation")
{
    const std::set<std::string> operations{
        "are_isomorphic",        "automorphism_count",   "bounded_degree_max_tree", "build_universal_graph",
        "canonical_form",        "certify_builtin",      "chernoff_tail",           "constant_c",
        "count_embeddings",      "count_subgraph_copies", "counting_ledger",        "decode",
        "degeneracy",            "degeneracy_ordering",  "dense_core",              "embed_into_universal",
        "encode",                "enumerate_unlabeled",  "eval",                    "falsify_decency",
        "induced_subgraph",      "is_f_good",            "labeled_count",           "max_edges_k_subgraph",
        "mon_closure_census",    "monotone_class_bound", "naive_goodness_oracle",   "parse_graph",
        "ratio_inequalities",    "run_goodness_experiment", "run_transfer_experiment", "sample_gnm",
        "sample_gnp",            "smallness_probe",      "spanning_family",         "threshold",
    };
    std::set<std::string> reached;
    for (const auto& entry : cli::registry())
        reached.insert(entry.operations.begin(), entry.operations.end());
    for (const auto& op : operations) {
        CAPTURE(op);
        CHECK(reached.count(op) == 1);
    }
    const std::set<std::string> required_paths{
        "graph info",       "graph canon",      "graph iso",           "graph aut",          "label encode",
        "label decode",     "label roundtrip",  "universal build",     "universal check",    "good check",
        "decent certify",   "decent falsify",   "decent constants",    "sample gnp",         "sample gnm",
        "experiment goodness", "experiment transfer", "experiment chernoff", "census",       "ledger",
        "tree dense-core",  "tree family"};
    std::set<std::string> paths;
    for (const auto& entry : cli::registry())
        paths.insert(entry.path);
    for (const auto& p : required_paths)
        CHECK(paths.count(p) == 1);
}

TEST_CASE("every registered subcommand runs")
{
    Scratch s;
    const std::string p4 = s.write("p4.el", graphs::path(4));
    const std::string c4 = s.write("c4.el", graphs::cycle(4));
    const std::string k4 = s.write("k4.el", graphs::complete(4));
    const std::string k3 = s.write("k3.el", graphs::complete(3));
    const std::string star = s.write("star.el", graphs::star(3));
    const std::string pet = s.write("petersen.el", graphs::petersen());

    const std::vector<std::vector<std::string>> invocations{
        {"graph", "info", p4},
        {"graph", "canon", c4},
        {"graph", "iso", c4, c4},
        {"graph", "aut", pet},
        {"graph", "count", s.write("p3.el", graphs::path(3)), k3},
        {"graph", "induced", k4, "--vertices", "0", "2"},
        {"graph", "enumerate", "--n", "4"},
        {"label", "encode", pet},
        {"label", "decode", "40", "c0", "--n", "2", "--k", "1"},
        {"label", "roundtrip", pet},
        {"label", "bound", "--C", "1", "--f", "log", "--n", "1024"},
        {"universal", "build", "--n", "4", "--k", "1"},
        {"universal", "check", p4, "--n", "6", "--k", "1"},
        {"good", "check", k4, "--f", "log", "--c", "1", "--oracle"},
        {"good", "densest", pet, "--k", "5"},
        {"good", "threshold", "--k", "4", "--n", "16", "--f", "log", "--c", "1"},
        {"decent", "certify", "--f", "pow:2:0.5"},
        {"decent", "eval", "--f", "log", "--x", "1024"},
        {"decent", "falsify", "--parity", "--delta", "0.5", "--C", "1", "--s", "16", "--integral"},
        {"decent", "constants", "--delta", "0.5", "--C", "1", "--s", "2", "--gamma", "2"},
        {"decent", "ratios", "--f", "log", "--n", "10000", "--k", "1000"},
        {"sample", "gnp", "--n", "10", "--p", "0.3", "--seed", "1"},
        {"sample", "gnm", "--n", "10", "--m", "7", "--seed", "1"},
        {"experiment", "goodness", "--f", "log", "--gamma", "2", "--c", "auto", "--n", "12", "--trials", "3"},
        {"experiment", "transfer", "--property", "triangle", "--n", "12", "--p", "0.2", "--trials", "50"},
        {"experiment", "chernoff", "--N", "100", "--p", "0.1", "--t", "20"},
        {"census", "--seeds", k3, "--max-n", "3"},
        {"ledger", "--f", "log", "--n-grid", "2^10..2^12"},
        {"tree", "max", pet, "--d", "2"},
        {"tree", "dense-core", pet, "--d", "3"},
        {"tree", "family", c4, "--tree", p4},
    };
    std::set<std::string> seen;
    for (const auto& args : invocations) {
        const Result r = run(args);
        CAPTURE(args[0] + " " + args[1]);
        CAPTURE(r.err);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        seen.insert(args[0] == "census" || args[0] == "ledger" ? args[0] : args[0] + " " + args[1]);
    }
    for (const auto& entry : cli::registry())
        CHECK(seen.count(entry.path) == 1);
}

TEST_CASE("cli outputs")
{
    Scratch s;
    const std::string k2 = s.write("k2.el", graphs::complete(2));
    const auto enc = json_of(run({"label", "encode", k2}));
    CHECK(enc["labels"][0] == "40");
    CHECK(enc["labels"][1] == "c0");

    const auto dec = json_of(run({"label", "decode", "40", "c0", "--n", "2", "--k", "1"}));
    CHECK(dec["adjacent"] == true);

    const auto census = json_of(run({"census", "--seeds", s.write("k3.el", graphs::complete(3)), "--max-n", "3"}));
    CHECK(census["rows"][2]["labeled"] == "8"); // exact integers as strings

    const auto gnm = run({"sample", "gnm", "--n", "6", "--m", "4", "--seed", "9"});
    CHECK(parse_graph(json_of(gnm)["document"].get<std::string>()).edge_count() == 4);
    const auto counts = json_of(run({"graph", "count", s.write("p3.el", graphs::path(3)), s.write("k3b.el", graphs::complete(3))}));
    CHECK(counts["embeddings"] == "6");

    const std::string csv = s.path("report.csv");
    CHECK(run({"experiment", "goodness", "--n", "12", "--trials", "2", "--csv", "--out", csv}).code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,trials,violations,inconclusive,rate,n_pow_minus_2,c_used,p_used");
}

TEST_CASE("identical invocations give identical output")
{
    Scratch s;
    const std::vector<std::vector<std::string>> invocations{
        {"sample", "gnp", "--n", "30", "--p", "0.2", "--seed", "5", "--trial", "3"},
        {"experiment", "goodness", "--n", "12,16", "--trials", "4", "--seed", "3"},
        {"experiment", "transfer", "--property", "connected", "--n", "10", "--p", "0.3", "--trials", "40"},
    };
    for (const auto& args : invocations) {
        const Result a = run(args);
        CHECK(a.code == 0);
        CHECK(run(args).out == a.out);
        std::vector<std::string> threaded{"--threads", "3"};
        threaded.insert(threaded.end(), args.begin(), args.end());
        CHECK(run(threaded).out == a.out);
    }
}

#ifdef LABELKIT_CLI_PATH
TEST_CASE("the installed binary reports exit codes")
{
    const std::string bin = LABELKIT_CLI_PATH;
    const auto status = [](const std::string& cmd) {
        const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(bin + " label decode zz zz --n 4 --k 1") == 2);
    CHECK(status(bin + " decent eval --f log --x 1") == 1);
    CHECK(status(bin + " decent eval --f log --x 1024") == 0);
}
#endif
