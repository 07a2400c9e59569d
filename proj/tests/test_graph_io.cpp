#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "graphgen/er.hpp"
#include "graphgen/graph_io.hpp"

using namespace graphgen;

TEST_CASE("TSV format is byte-exact") {
    EdgeList one;
    one.num_rows = one.num_cols = 2;
    one.edges = {{0, 1}};
    std::ostringstream out;
    const std::uint64_t bytes = write_edges(one, EdgeFileFormat::TSV, out);
    CHECK(out.str() == "0\t1\n");
    CHECK(bytes == 4);
}

TEST_CASE("MatrixMarket format is byte-exact") {
    EdgeList empty;
    empty.num_rows = empty.num_cols = 4;
    std::ostringstream out;
    write_edges(empty, EdgeFileFormat::MatrixMarket, out);
    CHECK(out.str() == "%%MatrixMarket matrix coordinate pattern general\n4 4 0\n");

    EdgeList some;
    some.num_rows = 3;
    some.num_cols = 5;
    some.edges = {{0, 4}, {2, 0}};
    std::ostringstream out2;
    write_edges(some, EdgeFileFormat::MatrixMarket, out2);
    CHECK(out2.str() ==
          "%%MatrixMarket matrix coordinate pattern general\n3 5 2\n1 5\n3 1\n");
}

TEST_CASE("golden fixtures parse back to the same edges") {
    // three fixed fixtures, byte-compared, then re-read
    const std::string golden_tsv = "0\t0\n2\t1\n1\t2\n";
    EdgeList fixture;
    fixture.num_rows = fixture.num_cols = 3;
    fixture.edges = {{0, 0}, {2, 1}, {1, 2}};
    std::ostringstream out;
    write_edges(fixture, EdgeFileFormat::TSV, out);
    CHECK(out.str() == golden_tsv);
    std::istringstream in(golden_tsv);
    CHECK(read_edges(in, EdgeFileFormat::TSV, 3, 3) == fixture);

    const std::string golden_mm =
        "%%MatrixMarket matrix coordinate pattern general\n3 3 3\n1 1\n3 2\n2 3\n";
    std::ostringstream out2;
    write_edges(fixture, EdgeFileFormat::MatrixMarket, out2);
    CHECK(out2.str() == golden_mm);
    std::istringstream in2(golden_mm);
    CHECK(read_edges(in2, EdgeFileFormat::MatrixMarket) == fixture);

    const std::string golden_empty = "%%MatrixMarket matrix coordinate pattern general\n2 7 0\n";
    std::istringstream in3(golden_empty);
    const EdgeList parsed = read_edges(in3, EdgeFileFormat::MatrixMarket);
    CHECK(parsed.num_rows == 2);
    CHECK(parsed.num_cols == 7);
    CHECK(parsed.size() == 0);
}

TEST_CASE("write/read round-trips on random edge lists") {
    RandomStream seeds(42);
    for (int rep = 0; rep < 100; ++rep) {
        RandomStream s(seeds.next_u64());
        const std::int64_t rows = uniform_int(s, 1, 12);
        const std::int64_t cols = uniform_int(s, 1, 12);
        EdgeList edges = grass_hop_er_rect(rows, cols, Probability(0.3), s);

        std::ostringstream tsv;
        write_edges(edges, EdgeFileFormat::TSV, tsv);
        std::istringstream tsv_in(tsv.str());
        const EdgeList tsv_back = read_edges(tsv_in, EdgeFileFormat::TSV, rows, cols);
        CHECK(tsv_back == edges);

        std::ostringstream mm;
        write_edges(edges, EdgeFileFormat::MatrixMarket, mm);
        std::istringstream mm_in(mm.str());
        CHECK(read_edges(mm_in, EdgeFileFormat::MatrixMarket) == edges);
    }
}

TEST_CASE("read_matrix accepts whitespace and comma separators") {
    std::istringstream ws("0.99 0.5\n0.5 0.2\n");
    const ProbabilityMatrix m = read_matrix(ws);
    CHECK(m.rows == 2);
    CHECK(m.at(0, 0) == 0.99);
    CHECK(m.at(1, 1) == 0.2);

    std::istringstream commas("0.99, 0.5\n0.5, 0.2\n");
    const ProbabilityMatrix m2 = read_matrix(commas);
    CHECK(m2.data == m.data);

    std::istringstream single("1\n");
    const ProbabilityMatrix one = read_matrix(single);
    CHECK(one.rows == 1);
    CHECK(one.at(0, 0) == 1.0);
}

TEST_CASE("read_matrix error paths carry line numbers") {
    std::istringstream ragged("0.5, 0.5\n0.5\n");
    CHECK_THROWS_WITH(read_matrix(ragged), Catch::Matchers::ContainsSubstring("line 2"));

    std::istringstream nonnum("0.5 zebra\n");
    CHECK_THROWS_WITH(read_matrix(nonnum), Catch::Matchers::ContainsSubstring("line 1"));

    std::istringstream toobig("0.5 1.5\n");
    CHECK_THROWS_AS(read_matrix(toobig), std::runtime_error);

    std::istringstream blank("");
    CHECK_THROWS_AS(read_matrix(blank), std::runtime_error);
}

TEST_CASE("read_degrees skips comments and rejects bad tokens") {
    std::istringstream good("4\n3\n2\n2\n2\n1\n1\n1\n");
    CHECK(read_degrees(good) == DegreeSequence{4, 3, 2, 2, 2, 1, 1, 1});

    std::istringstream commented("# header\n4\n\n  3\n");
    CHECK(read_degrees(commented) == DegreeSequence{4, 3});

    std::istringstream empty("");
    CHECK(read_degrees(empty).empty());

    std::istringstream negative("-1\n");
    CHECK_THROWS_WITH(read_degrees(negative), Catch::Matchers::ContainsSubstring("line 1"));

    std::istringstream frac("2.5\n");
    CHECK_THROWS_AS(read_degrees(frac), std::runtime_error);
}
