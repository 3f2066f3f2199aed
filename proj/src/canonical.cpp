#include "pentagon/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace pentagon {

namespace {

constexpr int kCanonMax = 16;

// Search state for one canonical_form call. The ordered partition lives in
// order[] (position -> vertex) with cell_start[p] = first position of the cell
// containing position p; cells are contiguous.
struct CanonSearch {
    const SmallGraph* g = nullptr;
    int n = 0;

    struct Node {
        std::array<std::uint8_t, kCanonMax> order;
        std::array<std::uint8_t, kCanonMax> cell_start;
    };

    std::array<std::uint8_t, kCanonMax> best_order{};
    std::array<std::uint8_t, kCanonMax> leaf_bits{};   // packed rows of current leaf
    std::array<std::uint8_t, kCanonMax> best_bits{};
    bool have_best = false;

    std::vector<std::array<std::uint8_t, kCanonMax>> aut;  // generators + inverses
    std::array<std::uint8_t, kCanonMax> path{};             // individualized vertices
    int depth = 0;

    // Splits every cell by neighbor counts until the partition is equitable.
    void refine(Node& nd) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n;) {
                int e = s + 1;
                while (e < n && nd.cell_start[e] == s) ++e;
                std::uint64_t splitter = 0;
                for (int p = s; p < e; ++p) splitter |= 1ull << nd.order[p];
                // split every other cell by count of neighbors in this one
                for (int ds = 0; ds < n;) {
                    int de = ds + 1;
                    while (de < n && nd.cell_start[de] == ds) ++de;
                    if (de - ds > 1 && split_cell(nd, ds, de, splitter)) changed = true;
                    ds = de;
                }
                s = e;
            }
        }
    }

    // Orders cell [s, e) by key ascending and inserts boundaries at key changes.
    bool split_cell(Node& nd, int s, int e, std::uint64_t splitter) const {
        std::array<std::uint8_t, kCanonMax> key{};
        for (int p = s; p < e; ++p)
            key[p] = static_cast<std::uint8_t>(__builtin_popcountll(g->adj[nd.order[p]] & splitter));
        bool uniform = true;
        for (int p = s + 1; p < e; ++p)
            if (key[p] != key[s]) uniform = false;
        if (uniform) return false;
        // insertion sort, stable, keys alongside
        for (int p = s + 1; p < e; ++p) {
            std::uint8_t kv = key[p], ov = nd.order[p];
            int q = p;
            while (q > s && key[q - 1] > kv) {
                key[q] = key[q - 1];
                nd.order[q] = nd.order[q - 1];
                --q;
            }
            key[q] = kv;
            nd.order[q] = ov;
        }
        int run_start = s;
        for (int p = s; p < e; ++p) {
            if (p > s && key[p] != key[p - 1]) run_start = p;
            nd.cell_start[p] = static_cast<std::uint8_t>(run_start);
        }
        return true;
    }

    int first_nonsingleton(const Node& nd) const {
        for (int s = 0; s < n;) {
            int e = s + 1;
            while (e < n && nd.cell_start[e] == s) ++e;
            if (e - s > 1) return s;
            s = e;
        }
        return -1;
    }

    void handle_leaf(const Node& nd) {
        std::array<std::uint8_t, kCanonMax> bits{};
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g->edge(nd.order[i], nd.order[j])) bits[bit >> 3] |= 0x80u >> (bit & 7);
        if (!have_best) {
            best_bits = bits;
            best_order = nd.order;
            have_best = true;
            return;
        }
        int cmp = std::memcmp(bits.data(), best_bits.data(), sizeof bits);
        if (cmp > 0) {
            best_bits = bits;
            best_order = nd.order;
        } else if (cmp == 0 && aut.size() < 200) {
            // same certificate: position-wise map is an automorphism
            std::array<std::uint8_t, kCanonMax> sigma{}, sigma_inv{};
            for (int p = 0; p < n; ++p) {
                sigma[best_order[p]] = nd.order[p];
                sigma_inv[nd.order[p]] = best_order[p];
            }
            aut.push_back(sigma);
            if (sigma != sigma_inv) aut.push_back(sigma_inv);
        }
    }

    bool generator_prunes(int v, std::uint64_t tried) const {
        for (const auto& sigma : aut) {
            bool fixes_path = true;
            for (int d = 0; d < depth && fixes_path; ++d) fixes_path = sigma[path[d]] == path[d];
            if (fixes_path && (tried >> sigma[v] & 1)) return true;
        }
        return false;
    }

    void search(const Node& nd) {
        int s = first_nonsingleton(nd);
        if (s < 0) {
            handle_leaf(nd);
            return;
        }
        int e = s + 1;
        while (e < n && nd.cell_start[e] == s) ++e;
        std::array<std::uint8_t, kCanonMax> members{};
        int count = 0;
        for (int p = s; p < e; ++p) members[count++] = nd.order[p];
        std::sort(members.begin(), members.begin() + count);
        std::uint64_t tried = 0;
        for (int i = 0; i < count; ++i) {
            int v = members[i];
            if (generator_prunes(v, tried)) continue;
            tried |= 1ull << v;
            Node child = nd;
            // move v to the front of the cell, making it a singleton
            int vp = s;
            while (child.order[vp] != v) ++vp;
            while (vp > s) {
                child.order[vp] = child.order[vp - 1];
                --vp;
            }
            child.order[s] = static_cast<std::uint8_t>(v);
            for (int p = s + 1; p < e; ++p) child.cell_start[p] = static_cast<std::uint8_t>(s + 1);
            path[depth] = static_cast<std::uint8_t>(v);
            ++depth;
            refine(child);
            search(child);
            --depth;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    if (g.n > kCanonMax) throw std::invalid_argument("canonical_form supports n <= 16");
    CanonicalForm out;
    out.relabeling.assign(g.n, 0);
    std::size_t tri_bytes = (static_cast<std::size_t>(g.n) * (g.n - 1) / 2 + 7) / 8;
    out.certificate.assign(1 + tri_bytes, 0);
    out.certificate[0] = static_cast<std::uint8_t>(g.n);
    if (g.n <= 1) return out;

    CanonSearch cs;
    cs.g = &g;
    cs.n = g.n;
    CanonSearch::Node root;
    for (int p = 0; p < g.n; ++p) {
        root.order[p] = static_cast<std::uint8_t>(p);
        root.cell_start[p] = 0;
    }
    cs.refine(root);
    cs.search(root);

    for (int p = 0; p < g.n; ++p) out.relabeling[cs.best_order[p]] = p;
    std::memcpy(out.certificate.data() + 1, cs.best_bits.data(), tri_bytes);
    return out;
}

std::uint64_t canonical_code(const SmallGraph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
    CanonicalForm cf = canonical_form(g);
    std::uint64_t code = g.n;
    for (std::size_t i = 1; i < cf.certificate.size(); ++i)
        code = code << 8 | cf.certificate[i];
    return code;
}

SmallGraph graph_from_certificate(const std::vector<std::uint8_t>& certificate) {
    if (certificate.empty()) throw std::invalid_argument("empty certificate");
    int n = certificate[0];
    SmallGraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (certificate.at(1 + (bit >> 3)) >> (7 - (bit & 7)) & 1) g.add_edge(i, j);
    return g;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

namespace {

std::uint64_t count_extensions(const SmallGraph& g, std::array<std::uint8_t, 16>& pi, int k, std::uint64_t used) {
    if (k == g.n) return 1;
    std::uint64_t total = 0;
    for (int w = 0; w < g.n; ++w) {
        if (used >> w & 1) continue;
        if (g.degree(w) != g.degree(k)) continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) ok = g.edge(j, k) == g.edge(pi[j], w);
        if (!ok) continue;
        pi[k] = static_cast<std::uint8_t>(w);
        total += count_extensions(g, pi, k + 1, used | 1ull << w);
    }
    return total;
}

}  // namespace

std::uint64_t automorphism_count(const SmallGraph& g) {
    if (g.n > 10) throw std::invalid_argument("automorphism_count supports n <= 10");
    if (g.n <= 1) return 1;
    std::array<std::uint8_t, 16> pi{};
    return count_extensions(g, pi, 0, 0);
}

}  // namespace pentagon
