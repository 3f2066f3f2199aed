#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/counting.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/rational.hpp"

namespace pentagon {

// Recursive blow-up description: a leaf carries an arbitrary inner graph, an
// inner node carries a base graph with one child per base vertex.
struct BlowupTree {
    SmallGraph graph;
    std::vector<BlowupTree> children;

    bool is_leaf() const { return children.empty(); }
    int total_vertices() const;

    static BlowupTree leaf(SmallGraph g);
    static BlowupTree node(SmallGraph base, std::vector<BlowupTree> parts);
    // C5^{k x}: the (k-1)-times iterated blow-up of C5, k >= 1.
    static BlowupTree iterated_c5(int k);
    // Pentagon blow-up with the given inner graphs (sizes come from the inners).
    static BlowupTree pentagon(std::array<SmallGraph, 5> inners);
};

// Vertices of different children of a node are adjacent iff their base vertices are.
// Child vertex blocks are laid out in base-vertex order. Throws on > 64 vertices.
SmallGraph realize(const BlowupTree& t);

// R(n): induced-C5 count of the balanced recursive construction.
// R(n) = 0 for n < 5, else product of balanced parts plus the parts' values.
BigInt recursion_value(long n);

struct FivePartition {
    std::array<std::vector<int>, 5> classes;  // cross-adjacency i~j iff j-i in {1,4} mod 5
    std::array<int, 5> sizes() const;
};

struct PartitionFailure {
    int u = -1, v = -1;
    std::string reason;
};

struct DetectResult {
    std::optional<FivePartition> partition;
    PartitionFailure failure;  // meaningful only when !partition
};

// Finds a pentagon 5-partition if one exists (n >= 5, all classes nonempty).
// Complete: anchors on every induced C5 and verifies the induced classes exactly.
DetectResult detect_5_partition(const SmallGraph& g);

struct ComposeCheck {
    std::uint64_t lhs = 0;  // exhaustive count of the composed graph
    std::uint64_t rhs = 0;  // |outer| * C(h) + C(outer) * |h|^5
};

// Blows up every vertex of outer by a copy of h and compares the exhaustive
// induced-C5 count against the composition formula.
ComposeCheck compose_identity_check(const SmallGraph& outer, const SmallGraph& h);

}  // namespace pentagon
