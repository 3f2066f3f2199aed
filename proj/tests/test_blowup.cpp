#include <doctest.h>

#include <set>

#include "pentagon/blowup.hpp"
#include "pentagon/canonical.hpp"
#include "pentagon/counting.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::SplitMix64;

TEST_CASE("realize basic blow-ups") {
    std::vector<BlowupTree> singletons;
    for (int i = 0; i < 5; ++i) singletons.push_back(BlowupTree::leaf(SmallGraph::empty(1)));
    SmallGraph one = realize(BlowupTree::node(SmallGraph::cycle(5), std::move(singletons)));
    CHECK(isomorphic(one, SmallGraph::cycle(5)));

    std::array<SmallGraph, 5> pairs;
    pairs.fill(SmallGraph::empty(2));
    SmallGraph doubled = realize(BlowupTree::pentagon(pairs));
    CHECK(doubled.n == 10);
    CHECK(doubled.edge_count() == 20);  // each pentagon edge becomes a 2x2 block

    SmallGraph big = realize(BlowupTree::iterated_c5(2));
    CHECK(big.n == 25);
    CHECK(count_induced(big, SmallGraph::cycle(5)) == 3130);  // 5^5 + 5

    std::array<SmallGraph, 5> too_big;
    too_big.fill(SmallGraph::empty(13));
    CHECK_THROWS_AS(realize(BlowupTree::pentagon(too_big)), std::invalid_argument);
    CHECK_THROWS_AS(BlowupTree::node(SmallGraph::cycle(5), {}), std::invalid_argument);
}

TEST_CASE("recursion value R(n)") {
    CHECK(recursion_value(0) == 0);
    CHECK(recursion_value(4) == 0);
    CHECK(recursion_value(5) == 1);
    CHECK(recursion_value(6) == 2);
    CHECK(recursion_value(10) == 32);
    CHECK(recursion_value(25) == 3130);
    CHECK(recursion_value(26) == 3756);
    CHECK_THROWS_AS(recursion_value(-1), std::invalid_argument);
}

TEST_CASE("R matches the exhaustive count of the realized construction") {
    // the balanced construction on 5^k vertices is iterated_c5(k)
    CHECK(recursion_value(25) == BigInt(static_cast<unsigned long>(
        count_induced(realize(BlowupTree::iterated_c5(2)), SmallGraph::cycle(5)))));
}

TEST_CASE("R is nondecreasing") {
    BigInt prev = recursion_value(0);
    for (long n = 1; n <= 30000; ++n) {
        BigInt cur = recursion_value(n);
        CHECK(cur >= prev);
        prev = cur;
    }
    // strided spot checks further out
    for (long n = 31013; n + 1 <= 1000000; n += 9973) {
        CHECK(recursion_value(n) <= recursion_value(n + 1));
    }
}

TEST_CASE("R(5^k)/C(5^k,5) approaches 1/26 from above, gap shrinking") {
    // The construction's density is monotone decreasing toward the limit 1/26
    // (density monotonicity by averaging), never below it.
    Rational prev(2);
    Rational limit = rat(1, 26);
    Rational prev_gap(100);
    long n = 5;
    for (int k = 1; k <= 8; ++k) {
        Rational density = rat(recursion_value(n), binomial(BigInt(n), 5));
        CHECK(density < prev);
        CHECK(density > limit);
        Rational gap = density - limit;
        CHECK(gap < prev_gap);
        prev = density;
        prev_gap = gap;
        n *= 5;
    }
}

TEST_CASE("pentagon blow-up counting identity on random instances") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<SmallGraph, 5> inners;
        std::uint64_t product = 1, inner_sum = 0;
        int total = 0;
        for (int i = 0; i < 5; ++i) {
            int size = 1 + static_cast<int>(rng.below(5));
            if (total + size + (4 - i) > 22) size = 1;
            total += size;
            inners[i] = testutil::random_graph(size, rng, 1 + rng.below(3), 4);
            product *= static_cast<std::uint64_t>(size);
            inner_sum += count_induced(inners[i], SmallGraph::cycle(5));
        }
        SmallGraph g = realize(BlowupTree::pentagon(inners));
        CHECK(g.n <= 22);
        CHECK(count_induced(g, SmallGraph::cycle(5)) == product + inner_sum);
    }
}

TEST_CASE("detect_5_partition recovers planted partitions") {
    SmallGraph big = realize(BlowupTree::iterated_c5(2));
    DetectResult res = detect_5_partition(big);
    REQUIRE(res.partition.has_value());
    for (int size : res.partition->sizes()) CHECK(size == 5);

    DetectResult none = detect_5_partition(SmallGraph::complete(5));
    CHECK_FALSE(none.partition.has_value());
    CHECK(none.failure.reason != "");

    CHECK_FALSE(detect_5_partition(SmallGraph::empty(6)).partition.has_value());
    CHECK_THROWS_AS(detect_5_partition(SmallGraph::empty(4)), std::invalid_argument);

    SplitMix64 rng(59);
    std::array<int, 5> sizes = {3, 2, 2, 2, 1};
    for (int trial = 0; trial < 25; ++trial) {
        std::array<SmallGraph, 5> inners;
        for (int i = 0; i < 5; ++i) inners[i] = testutil::random_graph(sizes[i], rng);
        SmallGraph g = realize(BlowupTree::pentagon(inners));
        DetectResult r = detect_5_partition(g);
        REQUIRE(r.partition.has_value());
        // recovered classes equal the planted ones as a set of sets
        std::set<std::set<int>> planted, found;
        int offset = 0;
        for (int i = 0; i < 5; ++i) {
            std::set<int> cls;
            for (int v = 0; v < sizes[i]; ++v) cls.insert(offset + v);
            planted.insert(cls);
            offset += sizes[i];
            found.insert(std::set<int>(r.partition->classes[i].begin(), r.partition->classes[i].end()));
        }
        CHECK(planted == found);
    }
}

TEST_CASE("detect_5_partition verifies cross structure exactly") {
    // planted blow-up with one corrupted cross pair must not return the bad partition
    std::array<SmallGraph, 5> inners;
    inners.fill(SmallGraph::empty(2));
    SmallGraph g = realize(BlowupTree::pentagon(inners));
    g.remove_edge(1, 3);
    DetectResult r = detect_5_partition(g);
    CHECK_FALSE(r.partition.has_value());
}

TEST_CASE("composition identity") {
    ComposeCheck c1 = compose_identity_check(SmallGraph::cycle(5), SmallGraph::empty(1));
    CHECK(c1.lhs == 1);
    CHECK(c1.rhs == 1);

    ComposeCheck c2 = compose_identity_check(SmallGraph::cycle(5), SmallGraph::cycle(5));
    CHECK(c2.lhs == 3130);
    CHECK(c2.rhs == 3130);

    SplitMix64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        SmallGraph h = testutil::random_graph(4, rng);
        ComposeCheck c = compose_identity_check(SmallGraph::cycle(5), h);
        CHECK(c.lhs == c.rhs);
        CHECK(c.rhs == 1024 + 5 * count_induced(h, SmallGraph::cycle(5)));
    }
    CHECK_THROWS_AS(compose_identity_check(SmallGraph::cycle(7), SmallGraph::complete(10)),
                    std::invalid_argument);
}
