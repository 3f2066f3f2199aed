#include <doctest.h>

#include <fstream>

#include "pentagon/canonical.hpp"
#include "pentagon/graph.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::SplitMix64;

namespace {

std::vector<std::string> corpus_lines() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/graph6_corpus.txt");
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("graph6 round-trip on the frozen corpus") {
    auto lines = corpus_lines();
    CHECK(lines.size() == 100);
    for (const auto& line : lines) {
        SmallGraph g = from_graph6(line);
        CHECK(g.check_invariants());
        CHECK(to_graph6(g) == line);
    }
}

TEST_CASE("graph6 agrees with standard tooling on known encodings") {
    // reference strings produced by networkx
    CHECK(from_graph6("Dhc") == SmallGraph::cycle(5));
    CHECK(to_graph6(SmallGraph::cycle(5)) == "Dhc");
    CHECK(from_graph6("D~{") == SmallGraph::complete(5));
    CHECK(from_graph6("IheA@GUAo") == SmallGraph::petersen());
    CHECK(from_graph6("Ch") == SmallGraph::path(4));
    CHECK(from_graph6("?").n == 0);
    CHECK(from_graph6("@").n == 1);
    CHECK(to_graph6(SmallGraph::cycle(64)).substr(0, 4) == "~?@?");
    CHECK(from_graph6(to_graph6(SmallGraph::cycle(63))) == SmallGraph::cycle(63));
    CHECK(from_graph6(to_graph6(SmallGraph::cycle(64))) == SmallGraph::cycle(64));
    CHECK(from_graph6(">>graph6<<Dhc") == SmallGraph::cycle(5));
}

TEST_CASE("graph6 parse errors name the byte offset") {
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6("Dhc "), Graph6ParseError);   // trailing garbage
    CHECK_THROWS_AS(from_graph6("Dh"), Graph6ParseError);     // truncated
    CHECK_THROWS_AS(from_graph6("D\x1fhc"), Graph6ParseError);  // invalid byte
    CHECK_THROWS_AS(from_graph6("~~????"), Graph6ParseError);  // 8-byte count form
    // n = 65 > 64
    std::string too_big = "~";
    too_big += static_cast<char>(63);
    too_big += static_cast<char>(64);
    too_big += static_cast<char>(63 + 1);
    CHECK_THROWS_AS(from_graph6(too_big), Graph6ParseError);
    try {
        from_graph6("Dhc!");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
    }
    // nonzero padding bits: C5's last data byte is 'c' = 100100 with two pad
    // bits; 'd' = 100101 sets the final pad bit
    CHECK_THROWS_AS(from_graph6("Dhd"), Graph6ParseError);
}

TEST_CASE("complement is an involution and C5 is self-complementary") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        SmallGraph g = testutil::random_graph(static_cast<int>(rng.below(13)), rng);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).check_invariants());
    }
    CHECK(isomorphic(complement(SmallGraph::cycle(5)), SmallGraph::cycle(5)));
    CHECK(complement(SmallGraph::empty(5)) == SmallGraph::complete(5));
    CHECK(complement(complement(SmallGraph::cycle(64))) == SmallGraph::cycle(64));
}

TEST_CASE("graph6 round-trip on random graphs including n=63,64") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = trial < 30 ? static_cast<int>(rng.below(40)) : 63 + static_cast<int>(rng.below(2));
        SmallGraph g = testutil::random_graph(n, rng, 1 + rng.below(3), 4);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}
