#pragma once

#include <cstdint>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Certificate layout: byte 0 = n, then the upper triangle of the canonical
// adjacency matrix packed row-major, MSB first. Equal certificates <=> isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> certificate;
    std::vector<int> relabeling;  // new label of old vertex u is relabeling[u]
};

// Refinement + individualization search, n <= 16.
CanonicalForm canonical_form(const SmallGraph& g);

// Certificate packed into a single word, n <= 11 (55 triangle bits + 5 bits of n).
std::uint64_t canonical_code(const SmallGraph& g);

SmallGraph graph_from_certificate(const std::vector<std::uint8_t>& certificate);

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

// |Aut(g)| by exhaustive backtracking over vertex bijections, n <= 10.
std::uint64_t automorphism_count(const SmallGraph& g);

}  // namespace pentagon
