#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = itop::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string corpus(const char* name) { return (fs::path(ITOP_CORPUS_DIR) / name).string(); }

}  // namespace

TEST_CASE("golden outputs") {
    const fs::path dir = fs::path(ITOP_CORPUS_DIR).parent_path() / "golden";
    int cases = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".cmd") continue;
        ++cases;
        std::istringstream cmd(slurp(entry.path()));
        std::string line;
        std::getline(cmd, line);
        int expected_code = 0;
        cmd >> expected_code;

        std::vector<std::string> args;
        std::istringstream words(line);
        for (std::string w; words >> w;) {
            if (w.starts_with("@corpus/")) w = corpus(w.c_str() + 8);
            args.push_back(w);
        }
        auto expected = entry.path();
        expected.replace_extension(".out");

        CAPTURE(entry.path().filename().string());
        const auto r = run(args);
        CHECK(r.code == expected_code);
        CHECK(r.out == slurp(expected));
    }
    CHECK(cases >= 20);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--bound", "3", "T99"}).code == 2);
    CHECK(run({"verify", "--bound", "3", "INF1"}).code == 2);
    CHECK(run({"verify", "--bound", "5", "T1"}).code == 2);
    CHECK(run({"verify", "--bound", "2", "--mode", "lazy"}).code == 2);
    CHECK(run({"falsify", "tau_open", "continuous", "--bound", "2"}).code == 2);
    CHECK(run({"enumerate", "5", "topologies"}).code == 2);
    CHECK(run({"enumerate", "3", "spaces"}).code == 2);
    CHECK(run({"format", "/nonexistent/file.top"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("expression diagnostics point at the offending token") {
    const auto file = corpus("example6.top");
    auto r = run({"compute", file, "sharp", "{b", "z}"});
    CHECK(r.code == 2);
    CHECK(r.err.find("expression:1:10: UnknownLabel") != std::string::npos);

    r = run({"compute", file, "frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.err.find("expression:1:1: UnknownOperator") != std::string::npos);

    r = run({"compute", file, "star", "Q"});
    CHECK(r.err.find("UnknownName") != std::string::npos);

    r = run({"compute", file, "tau_star", "{a}"});
    CHECK(r.err.find("expression:1:10: Syntax") != std::string::npos);

    r = run({"compute", file, "closure"});
    CHECK(r.err.find("expected a set name or literal") != std::string::npos);
}

TEST_CASE("document diagnostics are prefixed with the file") {
    const auto path = fs::temp_directory_path() / "itop_cli_bad.top";
    {
        std::ofstream out(path);
        out << "elements: a b c\ntopology: {} {a} {b} {a b c}\nideal: {}\n";
    }
    const auto r = run({"format", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find(path.string() + ":2:1: AxiomViolation: topology is not a topology: NotUnionClosed({a}, {b})") !=
          std::string::npos);
    fs::remove(path);
}

TEST_CASE("named sets work as operands") {
    const auto r = run({"compute", corpus("labels.top"), "closure", "Coast"});
    CHECK(r.code == 0);
    CHECK(r.out == "{east west}\n");
}

TEST_CASE("falsify output replays through the format") {
    const auto r = run({"falsify", "tau_star_open", "tau_sharp_open", "--bound", "3"});
    REQUIRE(r.code == 1);
    const auto doc_start = r.out.find("elements:");
    REQUIRE(doc_start != std::string::npos);
    const auto path = fs::temp_directory_path() / "itop_cli_counterexample.top";
    {
        std::ofstream out(path);
        out << r.out.substr(doc_start);
    }
    const auto replay = run({"replay", path.string(), "tau_star_open=>tau_sharp_open"});
    CHECK(replay.code == 1);
    CHECK(replay.out == "replay tau_star_open=>tau_sharp_open: counterexample\n");
    fs::remove(path);
}

TEST_CASE("seeded falsify runs are byte-identical") {
    const std::vector<std::string> args = {"falsify", "quotient_is_ideal", "full_in_family", "--bound", "4",
                                           "--budget", "5000", "--seed", "17"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK(a.out.find("mode=sampled") != std::string::npos);
}
