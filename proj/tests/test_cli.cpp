// Integration tests driving the built CLI binary; the path is baked in as
// GRAPHGEN_CLI_PATH by CMake.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "graphgen/graph_io.hpp"

namespace {

const std::string g_cli_path = GRAPHGEN_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string dir = "/tmp/graphgen_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    const std::string out_file = dir + "/stdout.txt";
    const std::string command = g_cli_path + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string dir = "/tmp/graphgen_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    const std::string path = dir + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("generate er is byte-reproducible under a fixed seed") {
    const std::string args = "generate er --nodes 8 --prob 0.25 --method grass --seed 7 --format tsv";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());
}

TEST_CASE("seed changes change the sample") {
    const RunResult a = run_cli("generate er --nodes 8 --prob 0.25 --seed 7");
    const RunResult b = run_cli("generate er --nodes 8 --prob 0.25 --seed 8");
    CHECK(a.output != b.output);
}

TEST_CASE("hex seeds are accepted") {
    const RunResult dec = run_cli("generate er --nodes 8 --prob 0.25 --seed 255");
    const RunResult hex = run_cli("generate er --nodes 8 --prob 0.25 --seed 0xff");
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.output == hex.output);
}

TEST_CASE("GRAPHGEN_SEED env var overrides the default seed only") {
    const std::string base = "generate er --nodes 8 --prob 0.25";
    const RunResult with_env = [&] {
        const std::string dir = "/tmp/graphgen_cli_test";
        std::system(("mkdir -p " + dir).c_str());
        const std::string out_file = dir + "/stdout.txt";
        const std::string command =
            "GRAPHGEN_SEED=99 " + g_cli_path + " " + base + " > " + out_file + " 2>/dev/null";
        RunResult r;
        const int status = std::system(command.c_str());
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(out_file);
        std::stringstream buf;
        buf << in.rdbuf();
        r.output = buf.str();
        return r;
    }();
    const RunResult explicit_seed = run_cli(base + " --seed 99");
    CHECK(with_env.output == explicit_seed.output);

    // explicit --seed beats the env var
    const RunResult both = [&] {
        const std::string out_file = "/tmp/graphgen_cli_test/stdout.txt";
        const std::string command = "GRAPHGEN_SEED=99 " + g_cli_path + " " + base +
                                    " --seed 7 > " + out_file + " 2>/dev/null";
        RunResult r;
        const int status = std::system(command.c_str());
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(out_file);
        std::stringstream buf;
        buf << in.rdbuf();
        r.output = buf.str();
        return r;
    }();
    const RunResult seven = run_cli(base + " --seed 7");
    CHECK(both.output == seven.output);
}

TEST_CASE("generate kron stays within the node space") {
    const std::string initiator = write_temp("k.txt", "0.99 0.5\n0.5 0.2\n");
    const RunResult r = run_cli("generate kron --initiator " + initiator +
                                " --power 3 --method grass --seed 1");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    const graphgen::EdgeList edges = graphgen::read_edges(in, graphgen::EdgeFileFormat::TSV, 8, 8);
    for (const auto& e : edges.edges) {
        CHECK(e.src >= 0);
        CHECK(e.src < 8);
        CHECK(e.dst >= 0);
        CHECK(e.dst < 8);
    }
}

TEST_CASE("fixed-edge generation with --undirected mirrors every pair") {
    const RunResult r = run_cli("generate er --nodes 4 --fixed-edges 2 --seed 3 --undirected");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    const graphgen::EdgeList edges = graphgen::read_edges(in, graphgen::EdgeFileFormat::TSV, 4, 4);
    REQUIRE(edges.size() == 4);  // 2 mirrored pairs
    CHECK(edges.edges[0].src == edges.edges[1].dst);
    CHECK(edges.edges[0].dst == edges.edges[1].src);
    CHECK(edges.edges[2].src == edges.edges[3].dst);
    CHECK(edges.edges[2].dst == edges.edges[3].src);
}

TEST_CASE("mm format output parses as MatrixMarket") {
    const RunResult r = run_cli("generate er --nodes 5 --prob 0.4 --seed 11 --format mm");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    const graphgen::EdgeList edges = graphgen::read_edges(in, graphgen::EdgeFileFormat::MatrixMarket);
    CHECK(edges.num_rows == 5);
    CHECK(edges.num_cols == 5);
}

TEST_CASE("--sort orders the edge list") {
    const RunResult r = run_cli("generate er --nodes 8 --prob 0.3 --seed 5 --sort");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    const graphgen::EdgeList edges = graphgen::read_edges(in, graphgen::EdgeFileFormat::TSV, 8, 8);
    for (std::size_t i = 1; i < edges.edges.size(); ++i)
        CHECK(edges.edges[i - 1] < edges.edges[i]);
}

TEST_CASE("sbm via --within/--between and chung-lu via --degrees") {
    const RunResult sbm =
        run_cli("generate sbm --sizes 3,5 --within 0.7 --between 0.1 --seed 2");
    CHECK(sbm.exit_code == 0);

    const std::string degrees = write_temp("d.txt", "4\n3\n2\n2\n2\n1\n1\n1\n");
    const RunResult cl = run_cli("generate chung-lu --degrees " + degrees + " --seed 2");
    CHECK(cl.exit_code == 0);
    const RunResult ball = run_cli("generate chung-lu --degrees " + degrees +
                                   " --method ball --seed 2");
    CHECK(ball.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("generate er --prob 0.5").exit_code == 2);           // missing --nodes
    CHECK(run_cli("generate er --nodes 4").exit_code == 2);            // missing --prob
    CHECK(run_cli("generate bogus --nodes 4").exit_code == 2);         // unknown model
    CHECK(run_cli("generate sbm --sizes 3,5").exit_code == 2);         // missing probabilities
    CHECK(run_cli("verify nonexistent-suite").exit_code == 2);         // unknown suite
    CHECK(run_cli("generate er --nodes 4 --prob 0.5 --method fixed").exit_code == 2);
    CHECK(run_cli("generate kron --power 2").exit_code == 2);          // missing initiator
}

TEST_CASE("domain errors exit 1") {
    CHECK(run_cli("generate er --nodes 4 --prob 1.5").exit_code == 1);
    CHECK(run_cli("generate er --nodes 4 --fixed-edges 7 --seed 1").exit_code == 1);
    const std::string bad = write_temp("bad.txt", "0.5 0.5\n0.5\n");
    CHECK(run_cli("generate kron --initiator " + bad + " --power 2").exit_code == 1);
}

TEST_CASE("parallel region sampling reproduces the sequential bytes") {
    const std::string initiator = write_temp("k.txt", "0.99 0.5\n0.5 0.2\n");
    const std::string base = "generate kron --initiator " + initiator +
                             " --power 4 --method grass --seed 9";
    const RunResult seq = run_cli(base);
    const RunResult par = run_cli(base + " --parallel-regions 4");
    REQUIRE(seq.exit_code == 0);
    REQUIRE(par.exit_code == 0);
    CHECK(seq.output == par.output);
}

TEST_CASE("verify subcommand runs a fast suite") {
    const RunResult r = run_cli("verify chi-square-fixture");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
}
