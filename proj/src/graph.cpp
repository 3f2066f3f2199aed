#include "pentagon/graph.hpp"

namespace pentagon {

SmallGraph::SmallGraph(int vertices) : n(vertices) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw std::invalid_argument("vertex count out of range [0, 64]: " + std::to_string(vertices));
    adj.assign(static_cast<std::size_t>(vertices), 0);
}

SmallGraph SmallGraph::complete(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph SmallGraph::cycle(int n) {
    SmallGraph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

SmallGraph SmallGraph::path(int n) {
    SmallGraph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

SmallGraph SmallGraph::petersen() {
    SmallGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

void SmallGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
}

void SmallGraph::remove_edge(int u, int v) {
    adj[u] &= ~(1ull << v);
    adj[v] &= ~(1ull << u);
}

void SmallGraph::toggle_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    adj[u] ^= 1ull << v;
    adj[v] ^= 1ull << u;
}

std::uint64_t SmallGraph::edge_count() const {
    std::uint64_t deg_sum = 0;
    for (int u = 0; u < n; ++u) deg_sum += static_cast<std::uint64_t>(degree(u));
    return deg_sum / 2;
}

SmallGraph SmallGraph::induced(std::span<const int> verts) const {
    SmallGraph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

SmallGraph SmallGraph::relabeled(std::span<const int> perm) const {
    SmallGraph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

bool SmallGraph::check_invariants() const {
    if (n < 0 || n > kMaxVertices || static_cast<int>(adj.size()) != n) return false;
    std::uint64_t valid = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int u = 0; u < n; ++u) {
        if (adj[u] & ~valid) return false;
        if (adj[u] >> u & 1u) return false;
        for (int v = 0; v < n; ++v)
            if ((adj[u] >> v & 1u) != (adj[v] >> u & 1u)) return false;
    }
    return true;
}

SmallGraph complement(const SmallGraph& g) {
    SmallGraph h(g.n);
    std::uint64_t valid = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
    for (int u = 0; u < g.n; ++u) h.adj[u] = ~g.adj[u] & valid & ~(1ull << u);
    return h;
}

namespace {

// graph6: printable bytes 63..126 carrying 6 bits each.
constexpr int kG6Min = 63;
constexpr int kG6Max = 126;

int decode_byte(std::string_view text, std::size_t at) {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < kG6Min || c > kG6Max) throw Graph6ParseError("invalid graph6 byte", at);
    return c - kG6Min;
}

}  // namespace

SmallGraph from_graph6(std::string_view text) {
    // Tolerate the optional ">>graph6<<" file header emitted by standard tools.
    std::size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) {
        base = kHeader.size();
        text.remove_prefix(kHeader.size());
    }
    if (text.empty()) throw Graph6ParseError("empty graph6 input", base);

    std::size_t at = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6ParseError("graph6 8-byte vertex count not supported (n > 64)", base + 1);
        if (text.size() < 4) throw Graph6ParseError("truncated graph6 vertex count", base + text.size());
        n = 0;
        for (at = 1; at <= 3; ++at) n = n << 6 | decode_byte(text, at);
    } else {
        n = decode_byte(text, 0);
        at = 1;
    }
    if (n > kMaxVertices) throw Graph6ParseError("vertex count " + std::to_string(n) + " exceeds 64", base);

    SmallGraph g(static_cast<int>(n));
    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (text.size() < at + bytes_needed)
        throw Graph6ParseError("truncated graph6 edge data", base + text.size());
    if (text.size() > at + bytes_needed)
        throw Graph6ParseError("trailing garbage after graph6 data", base + at + bytes_needed);

    std::size_t bit = 0;
    int group = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (bit % 6 == 0) group = decode_byte(text, at + bit / 6);
            if (group >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    }
    if (bit % 6 != 0) {
        int pad = group & ((1 << (6 - bit % 6)) - 1);
        if (pad != 0) throw Graph6ParseError("nonzero padding bits", base + at + bytes_needed - 1);
    }
    return g;
}

std::string to_graph6(const SmallGraph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + kG6Min));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>((g.n >> 12 & 63) + kG6Min));
        out.push_back(static_cast<char>((g.n >> 6 & 63) + kG6Min));
        out.push_back(static_cast<char>((g.n & 63) + kG6Min));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Min));
                group = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Min));
    return out;
}

}  // namespace pentagon
