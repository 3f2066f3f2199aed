#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Streams one representative per isomorphism class of n-vertex graphs, built
// level by level: every (n-1)-vertex class is extended by each of the 2^(n-1)
// neighborhoods of a new last vertex and kept iff its certificate is new.
// Deterministic order. n <= 10.
void for_each_graph_class(int n, const std::function<void(const SmallGraph&)>& fn, int threads = 0);

std::uint64_t count_graph_classes(int n, int threads = 0);

struct SearchResult {
    int n = 0;
    std::uint64_t best_count = 0;
    std::vector<std::string> witnesses;  // graph6, extremal classes (exhaustive) or best found
    bool exhaustive = false;
    std::uint64_t graphs_examined = 0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
};

// Exact C(n) over all isomorphism classes, 5 <= n <= 10.
SearchResult exhaustive_c(int n, int threads = 0);

// Steepest-ascent over edge flips and vertex duplications with seeded random
// restarts; deterministic for a fixed seed. n <= 64.
SearchResult hill_climb(int n, std::uint64_t seed, std::uint64_t iterations);

}  // namespace pentagon
