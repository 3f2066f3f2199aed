#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagon/graph.hpp"
#include "pentagon/rational.hpp"

namespace pentagon {

// A set of pairwise non-isomorphic patterns with a common vertex count.
struct PatternFamily {
    std::string label;
    std::vector<SmallGraph> members;
};

// Checks the family invariants (dedup by canonical form, equal vertex counts).
PatternFamily make_family(std::string label, std::vector<SmallGraph> members);

// Membership test for "does this labeled k-vertex adjacency code induce a family member",
// precomputed over all relabelings of all members. k <= 7 (at most 2^21 codes).
class PatternCodeSet {
  public:
    PatternCodeSet(int k, const std::vector<SmallGraph>& members);
    explicit PatternCodeSet(const PatternFamily& fam);
    explicit PatternCodeSet(const SmallGraph& single);

    int pattern_size() const { return k_; }
    bool contains(std::uint32_t code) const { return bits_[code >> 6] >> (code & 63) & 1u; }

  private:
    int k_;
    std::vector<std::uint64_t> bits_;
};

// Adjacency code of the induced subgraph on verts (row-major pair bits).
std::uint32_t induced_code(const SmallGraph& g, const int* verts, int k);

std::uint64_t count_induced(const SmallGraph& g, const SmallGraph& pattern);
std::uint64_t count_family(const SmallGraph& g, const PatternFamily& fam);
std::uint64_t count_code_set(const SmallGraph& g, const PatternCodeSet& codes);

// All 5-subsets inducing a C5, as ascending vertex tuples in lexicographic order.
std::vector<std::array<int, 5>> induced_c5_sets(const SmallGraph& g);

struct VertexCounts {
    std::vector<std::uint64_t> per_vertex;  // C5^u
    std::uint64_t total = 0;                // C(G)
};

VertexCounts vertex_c5_counts(const SmallGraph& g);
std::uint64_t pair_c5_count(const SmallGraph& g, int u, int v);

// An induced C5 with its cyclic labeling fixed: edges z[i]z[i+1 mod 5] exactly.
struct Pentagon {
    std::array<int, 5> z;
};

// Canonical cyclic labeling of a 5-set inducing C5 (smallest vertex first,
// then its smaller neighbor). Throws if the set does not induce a C5.
Pentagon pentagon_from_set(const SmallGraph& g, const std::array<int, 5>& verts);

// Exact local density of fam among 7-sets containing Z: count / C(n-5, 2).
// Z must induce a C5; returns 0 when n < 7 (no 2-element extensions).
Rational local_density_7(const SmallGraph& g, const std::array<int, 5>& z_set, const PatternFamily& fam);

struct PentagonScore {
    Pentagon pentagon;
    Rational score;
};

// argmax over induced C5s of C22111(Z) - a*C31111(Z); lexicographically least Z on ties.
PentagonScore best_pentagon(const SmallGraph& g, const Rational& a, const PatternFamily& fam22111,
                            const PatternFamily& fam31111);

struct PartitionAnalysis {
    Pentagon pentagon;
    std::array<std::vector<int>, 5> classes;  // Z_1..Z_5, each containing its z_i
    std::vector<int> outside;                 // X_0
    std::array<Rational, 6> x;                // x_0..x_5, class sizes / n
    Rational f;                               // funky pairs / n^2
    std::vector<Rational> df_per_vertex;      // funky degree / n, zero for X_0 vertices
    std::vector<std::pair<int, int>> funky_pairs;
};

PartitionAnalysis funky_analysis(const SmallGraph& g, const Pentagon& z);

}  // namespace pentagon
