// graphgen: sample Erdos-Renyi, Chung-Lu, stochastic block model, and
// stochastic Kronecker graphs by grass-hopping or ball-dropping, and run the
// statistical verification battery.
//
// Exit codes: 0 success, 1 runtime/domain failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphgen/graph_io.hpp"
#include "graphgen/graphgen.hpp"
#include "graphgen/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20170603;  // fixed so novice runs reproduce

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    std::size_t used = 0;
    const int base = text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0 ? 16 : 10;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used, base);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size())
        throw CLI::ValidationError("--seed", "expected a decimal or 0x-hex 64-bit value");
    return value;
}

struct GenerateRequest {
    std::string model;
    std::string method = "grass";
    std::int64_t nodes = 0;
    double prob = -1.0;
    std::int64_t fixed_edges = -1;
    std::string degrees_file;
    std::vector<std::int64_t> sizes;
    std::string qmatrix_file;
    double within = -1.0;
    double between = -1.0;
    std::string initiator_file;
    int power = 0;
    std::string seed_text;
    bool undirected = false;
    std::string format = "tsv";
    std::string out_path;
    bool sort = false;
    int parallel_regions = 1;
};

graphgen::ProbabilityMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return graphgen::read_matrix(in);
}

graphgen::DegreeSequence load_degrees(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open degree file: " + path);
    return graphgen::read_degrees(in);
}

void require_usage(bool condition, const std::string& message) {
    if (!condition) throw CLI::ValidationError("generate", message);
}

int run_generate(const GenerateRequest& req) {
    using namespace graphgen;

    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("GRAPHGEN_SEED"); env && *env) seed = parse_seed(env);
    if (!req.seed_text.empty()) seed = parse_seed(req.seed_text);
    RandomStream stream(seed);
    std::cerr << "seed=" << seed << "\n";

    EdgeList edges;
    const auto started = std::chrono::steady_clock::now();
    if (req.model == "er") {
        require_usage(req.nodes >= 1, "er: --nodes is required");
        const bool fixed = req.fixed_edges >= 0 || req.method == "fixed";
        if (fixed) {
            require_usage(req.method == "grass" || req.method == "fixed",
                          "er: --fixed-edges only combines with --method fixed");
            require_usage(req.fixed_edges >= 0, "er: --method fixed requires --fixed-edges");
            edges = fixed_edge_er(req.nodes, req.fixed_edges, stream);
            std::cerr << "method=fixed\n";
        } else {
            require_usage(req.prob >= 0.0, "er: --prob is required");
            const Probability p(req.prob);
            if (req.method == "coin") {
                edges = coin_flip_er(req.nodes, p, stream);
            } else if (req.method == "ball") {
                BallDropReport report;
                if (req.prob > 0.5) {
                    report = ball_drop_er_complement(req.nodes, p, stream);
                    std::cerr << "complement=1\n";
                } else {
                    report = ball_drop_er(req.nodes, p, stream);
                }
                std::cerr << "draws=" << report.draws << "\n"
                          << "duplicates=" << report.duplicates << "\n";
                edges = std::move(report.edges);
            } else if (req.method == "grass") {
                edges = grass_hop_er(req.nodes, p, stream);
            } else {
                require_usage(false, "er: method must be coin, ball, grass, or fixed");
            }
        }
    } else if (req.model == "chung-lu") {
        require_usage(!req.degrees_file.empty(), "chung-lu: --degrees FILE is required");
        const DegreeSequence d = load_degrees(req.degrees_file);
        if (req.method == "grass") {
            ChungLuGrassReport report = chung_lu_grass_report(d, stream, req.parallel_regions);
            std::cerr << "blocks=" << report.blocks_visited << "\n";
            edges = std::move(report.edges);
        } else if (req.method == "ball") {
            BallDropReport report = chung_lu_ball(d, stream);
            std::cerr << "draws=" << report.draws << "\n"
                      << "duplicates=" << report.duplicates << "\n";
            edges = std::move(report.edges);
        } else {
            require_usage(false, "chung-lu: method must be grass or ball");
        }
    } else if (req.model == "sbm") {
        require_usage(!req.sizes.empty(), "sbm: --sizes is required");
        BlockSpec spec;
        spec.sizes = req.sizes;
        if (!req.qmatrix_file.empty()) {
            spec.q = load_matrix(req.qmatrix_file);
        } else {
            require_usage(req.within >= 0.0 && req.between >= 0.0,
                          "sbm: provide --qmatrix FILE or both --within and --between");
            const auto t = static_cast<std::int64_t>(req.sizes.size());
            spec.q = ProbabilityMatrix(t, t, req.between);
            for (std::int64_t b = 0; b < t; ++b) spec.q.at(b, b) = req.within;
        }
        if (req.method == "grass") {
            edges = sbm_grass(spec, stream, req.parallel_regions);
        } else if (req.method == "ball") {
            BallDropReport report = sbm_ball(spec, stream);
            std::cerr << "draws=" << report.draws << "\n"
                      << "duplicates=" << report.duplicates << "\n";
            edges = std::move(report.edges);
        } else {
            require_usage(false, "sbm: method must be grass or ball");
        }
    } else if (req.model == "kron") {
        require_usage(!req.initiator_file.empty(), "kron: --initiator FILE is required");
        require_usage(req.power >= 1, "kron: --power is required");
        const Initiator K(load_matrix(req.initiator_file));
        if (req.method == "grass") {
            const KronSampleReport report =
                grass_hop_kron_report(K, req.power, stream, req.parallel_regions);
            std::cerr << "regions=" << report.regions_total << "\n"
                      << "geometric_draws=" << report.geometric_draws << "\n";
            edges = report.edges;
        } else if (req.method == "coin") {
            edges = coin_flip_kron(K, req.power, stream);
        } else {
            require_usage(false, "kron: method must be grass or coin");
        }
    } else {
        require_usage(false, "model must be er, chung-lu, sbm, or kron");
    }

    if (req.undirected) edges = symmetrize(edges);
    if (req.sort) edges.sort_lexicographic();

    const EdgeFileFormat format = parse_edge_format(req.format);
    std::uint64_t bytes = 0;
    if (!req.out_path.empty()) {
        std::ofstream out(req.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + req.out_path);
        bytes = write_edges(edges, format, out);
    } else {
        bytes = write_edges(edges, format, std::cout);
    }
    const auto finished = std::chrono::steady_clock::now();
    std::cerr << "edges=" << edges.size() << "\n"
              << "bytes=" << bytes << "\n"
              << "time_ms="
              << std::chrono::duration<double, std::milli>(finished - started).count() << "\n";
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t samples) {
    using graphgen::verify::CheckResult;
    std::vector<CheckResult> checks;
    if (suite == "all") {
        for (const auto& s : graphgen::verify::suites()) {
            const auto part = s.run(samples);
            checks.insert(checks.end(), part.begin(), part.end());
        }
    } else {
        checks = graphgen::verify::run_suite(suite, samples);
    }
    bool all_pass = true;
    for (const CheckResult& check : checks) {
        all_pass = all_pass && check.pass;
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name
                  << (check.detail.empty() ? "" : "  [" + check.detail + "]") << "\n";
    }
    std::cout << (all_pass ? "OK" : "FAILED") << " (" << checks.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact random-graph sampling by grass-hopping and ball-dropping"};
    app.require_subcommand(1);

    GenerateRequest req;
    CLI::App* generate = app.add_subcommand("generate", "sample a graph and write an edge list");
    generate->add_option("model", req.model, "er | chung-lu | sbm | kron")->required();
    generate->add_option("--nodes", req.nodes, "node count (er)");
    generate->add_option("--prob", req.prob, "edge probability (er)");
    generate->add_option("--fixed-edges", req.fixed_edges, "exact undirected edge count (er)");
    generate->add_option("--degrees", req.degrees_file, "degree file, one integer per line");
    generate->add_option("--sizes", req.sizes, "block sizes a,b,c (sbm)")->delimiter(',');
    generate->add_option("--qmatrix", req.qmatrix_file, "block probability matrix file (sbm)");
    generate->add_option("--within", req.within, "within-block probability (sbm)");
    generate->add_option("--between", req.between, "between-block probability (sbm)");
    generate->add_option("--initiator", req.initiator_file, "initiator matrix file (kron)");
    generate->add_option("--power", req.power, "Kronecker power k (kron)");
    generate->add_option("--method", req.method, "coin | ball | grass | fixed (default grass)");
    generate->add_option("--seed", req.seed_text, "64-bit seed, decimal or 0x-hex, or 'random'");
    generate->add_flag("--undirected", req.undirected, "mirror the strict upper triangle");
    generate->add_option("--format", req.format, "tsv | mm (default tsv)");
    generate->add_option("--out", req.out_path, "output file (default stdout)");
    generate->add_flag("--sort", req.sort, "sort edges lexicographically before writing");
    generate->add_option("--parallel-regions", req.parallel_regions,
                         "sample Kronecker regions on N threads (same output as N=1)");

    std::string suite;
    std::uint64_t samples = 0;
    CLI::App* verify = app.add_subcommand("verify", "run a statistical verification suite");
    std::string suite_help = "suite name: all";
    for (const auto& s : graphgen::verify::suites()) suite_help += ", " + s.name;
    verify->add_option("suite", suite, suite_help)->required();
    verify->add_option("--samples", samples, "override the sample budget (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help is success; anything else is a usage error
    }

    try {
        if (generate->parsed()) return run_generate(req);
        return run_verify(suite, samples);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
