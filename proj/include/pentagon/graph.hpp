#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentagon {

constexpr int kMaxVertices = 64;

// Undirected simple graph on at most 64 vertices, one adjacency word per vertex.
// Bit v of adj[u] is set iff uv is an edge. Symmetric, irreflexive, bits >= n zero.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    SmallGraph() = default;
    explicit SmallGraph(int vertices);

    static SmallGraph empty(int n) { return SmallGraph(n); }
    static SmallGraph complete(int n);
    static SmallGraph cycle(int n);
    static SmallGraph path(int n);
    static SmallGraph petersen();

    bool edge(int u, int v) const { return adj[u] >> v & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    int degree(int u) const { return __builtin_popcountll(adj[u]); }
    std::uint64_t edge_count() const;

    // Graph induced on verts, relabeled 0..k-1 in the given order.
    SmallGraph induced(std::span<const int> verts) const;
    // New label of old vertex u is perm[u].
    SmallGraph relabeled(std::span<const int> perm) const;

    bool check_invariants() const;
    bool operator==(const SmallGraph&) const = default;
};

SmallGraph complement(const SmallGraph& g);

class Graph6ParseError : public std::runtime_error {
  public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

SmallGraph from_graph6(std::string_view text);
std::string to_graph6(const SmallGraph& g);

}  // namespace pentagon
