#include <doctest.h>

#include <map>
#include <set>

#include "pentagon/canonical.hpp"
#include "pentagon/graph.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::SplitMix64;

TEST_CASE("certificate is invariant under relabeling") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(10));
        SmallGraph g = testutil::random_graph(n, rng, 1 + rng.below(3), 4);
        auto cf = canonical_form(g);
        for (int rep = 0; rep < 5; ++rep) {
            auto perm = testutil::random_permutation(n, rng);
            CHECK(canonical_form(g.relabeled(perm)).certificate == cf.certificate);
        }
    }
}

TEST_CASE("relabeling applied to g yields the certificate's graph") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.below(11));
        SmallGraph g = testutil::random_graph(n, rng);
        auto cf = canonical_form(g);
        CHECK(g.relabeled(cf.relabeling) == graph_from_certificate(cf.certificate));
    }
}

TEST_CASE("the 11 graphs on 4 vertices have pairwise distinct certificates") {
    // independent oracle: brute-force isomorphism grouping of all 2^6 labeled graphs
    std::vector<SmallGraph> reps;
    std::vector<std::vector<std::uint8_t>> certs;
    for (int mask = 0; mask < 64; ++mask) {
        SmallGraph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        bool seen = false;
        for (const auto& r : reps)
            if (testutil::isomorphic_brute(g, r)) seen = true;
        if (!seen) {
            reps.push_back(g);
            certs.push_back(canonical_form(g).certificate);
        }
    }
    CHECK(reps.size() == 11);
    std::set<std::vector<std::uint8_t>> distinct(certs.begin(), certs.end());
    CHECK(distinct.size() == 11);
}

TEST_CASE("certificate counts match unlabeled graph counts for n <= 7") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<std::uint8_t>> certs;
        int pairs = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << pairs); ++mask) {
            SmallGraph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            certs.insert(canonical_form(g).certificate);
        }
        CHECK(certs.size() == expected[n]);
    }
}

TEST_CASE("certificate equality agrees with brute-force isomorphism at n = 6") {
    // soundness: every labeled graph shares a certificate with exactly the
    // brute-force representative it is isomorphic to
    std::map<std::vector<std::uint8_t>, SmallGraph> rep_by_cert;
    SplitMix64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        SmallGraph g = testutil::random_graph(6, rng, 1 + rng.below(3), 4);
        auto cert = canonical_form(g).certificate;
        auto [it, fresh] = rep_by_cert.try_emplace(cert, g);
        if (!fresh) CHECK(testutil::isomorphic_brute(g, it->second));
    }
    // completeness: distinct certificates are really non-isomorphic
    std::vector<SmallGraph> reps;
    for (auto& [cert, g] : rep_by_cert) reps.push_back(g);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(testutil::isomorphic_brute(reps[i], reps[j]));
}

TEST_CASE("C5 and its complement share a certificate") {
    auto a = canonical_form(SmallGraph::cycle(5));
    auto b = canonical_form(complement(SmallGraph::cycle(5)));
    CHECK(a.certificate == b.certificate);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(SmallGraph::cycle(5)) == 10);
    CHECK(automorphism_count(SmallGraph::complete(5)) == 120);
    CHECK(automorphism_count(SmallGraph::petersen()) == 120);
    CHECK(automorphism_count(SmallGraph::empty(8)) == 40320);
    CHECK(automorphism_count(SmallGraph::path(4)) == 2);
    CHECK(automorphism_count(SmallGraph::empty(1)) == 1);
    CHECK(automorphism_count(SmallGraph::empty(0)) == 1);
}

TEST_CASE("hard regular cases canonicalize correctly") {
    SplitMix64 rng(23);
    for (const auto& g : {SmallGraph::petersen(), SmallGraph::cycle(10), SmallGraph::empty(10),
                          SmallGraph::complete(10)}) {
        auto cf = canonical_form(g);
        for (int rep = 0; rep < 10; ++rep) {
            auto perm = testutil::random_permutation(g.n, rng);
            CHECK(canonical_form(g.relabeled(perm)).certificate == cf.certificate);
        }
    }
}
