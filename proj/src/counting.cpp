#include "pentagon/counting.hpp"

#include <algorithm>
#include <numeric>

#include "pentagon/canonical.hpp"

namespace pentagon {

namespace {

int pair_count(int k) { return k * (k - 1) / 2; }

// row-major pair bit index, i < j
inline int pair_index(int i, int j, int k) { return i * k - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

PatternFamily make_family(std::string label, std::vector<SmallGraph> members) {
    if (members.empty()) throw std::invalid_argument("empty pattern family");
    int k = members.front().n;
    std::vector<std::vector<std::uint8_t>> certs;
    for (const auto& m : members) {
        if (m.n != k) throw std::invalid_argument("pattern family members differ in vertex count");
        certs.push_back(canonical_form(m).certificate);
    }
    for (std::size_t i = 0; i < certs.size(); ++i)
        for (std::size_t j = i + 1; j < certs.size(); ++j)
            if (certs[i] == certs[j]) throw std::invalid_argument("pattern family members not pairwise non-isomorphic");
    return PatternFamily{std::move(label), std::move(members)};
}

PatternCodeSet::PatternCodeSet(int k, const std::vector<SmallGraph>& members) : k_(k) {
    if (k < 1 || k > 7) throw std::invalid_argument("pattern size must be 1..7");
    bits_.assign((std::size_t{1} << pair_count(k) >> 6) + 1, 0);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& m : members) {
        if (m.n != k) throw std::invalid_argument("pattern size mismatch");
        std::vector<int> p = perm;
        do {
            std::uint32_t code = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (m.edge(p[i], p[j])) code |= 1u << pair_index(i, j, k);
            bits_[code >> 6] |= 1ull << (code & 63);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

PatternCodeSet::PatternCodeSet(const PatternFamily& fam) : PatternCodeSet(fam.members.front().n, fam.members) {}

PatternCodeSet::PatternCodeSet(const SmallGraph& single) : PatternCodeSet(single.n, std::vector<SmallGraph>{single}) {}

std::uint32_t induced_code(const SmallGraph& g, const int* verts, int k) {
    std::uint32_t code = 0;
    int t = 0;
    for (int i = 0; i < k; ++i) {
        std::uint64_t row = g.adj[verts[i]];
        for (int j = i + 1; j < k; ++j, ++t) code |= static_cast<std::uint32_t>(row >> verts[j] & 1u) << t;
    }
    return code;
}

namespace {

std::uint64_t count_rec(const SmallGraph& g, const PatternCodeSet& codes, int k, int* chosen, int depth,
                        int start, std::uint32_t code) {
    if (depth == k) return codes.contains(code) ? 1 : 0;
    std::uint64_t total = 0;
    for (int v = start; v <= g.n - (k - depth); ++v) {
        std::uint32_t c2 = code;
        for (int i = 0; i < depth; ++i)
            c2 |= static_cast<std::uint32_t>(g.adj[chosen[i]] >> v & 1u) << pair_index(i, depth, k);
        chosen[depth] = v;
        total += count_rec(g, codes, k, chosen, depth + 1, v + 1, c2);
    }
    return total;
}

}  // namespace

std::uint64_t count_code_set(const SmallGraph& g, const PatternCodeSet& codes) {
    int k = codes.pattern_size();
    if (k > g.n) return 0;
    int chosen[8];
    return count_rec(g, codes, k, chosen, 0, 0, 0);
}

std::uint64_t count_induced(const SmallGraph& g, const SmallGraph& pattern) {
    if (pattern.n > 7) throw std::invalid_argument("pattern size must be <= 7");
    if (pattern.n > g.n) return 0;
    if (pattern.n == 0) return 1;
    return count_code_set(g, PatternCodeSet(pattern));
}

std::uint64_t count_family(const SmallGraph& g, const PatternFamily& fam) {
    if (fam.members.front().n > g.n) return 0;
    return count_code_set(g, PatternCodeSet(fam));
}

std::vector<std::array<int, 5>> induced_c5_sets(const SmallGraph& g) {
    static const PatternCodeSet c5codes(SmallGraph::cycle(5));
    std::vector<std::array<int, 5>> out;
    if (g.n < 5) return out;
    int v[5];
    for (v[0] = 0; v[0] < g.n - 4; ++v[0])
        for (v[1] = v[0] + 1; v[1] < g.n - 3; ++v[1])
            for (v[2] = v[1] + 1; v[2] < g.n - 2; ++v[2])
                for (v[3] = v[2] + 1; v[3] < g.n - 1; ++v[3])
                    for (v[4] = v[3] + 1; v[4] < g.n; ++v[4])
                        if (c5codes.contains(induced_code(g, v, 5)))
                            out.push_back({v[0], v[1], v[2], v[3], v[4]});
    return out;
}

VertexCounts vertex_c5_counts(const SmallGraph& g) {
    VertexCounts vc;
    vc.per_vertex.assign(g.n, 0);
    for (const auto& s : induced_c5_sets(g)) {
        ++vc.total;
        for (int v : s) ++vc.per_vertex[v];
    }
    return vc;
}

std::uint64_t pair_c5_count(const SmallGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("pair_c5_count requires distinct vertices");
    static const PatternCodeSet c5codes(SmallGraph::cycle(5));
    std::uint64_t total = 0;
    int verts[5];
    for (int a = 0; a < g.n; ++a) {
        if (a == u || a == v) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (b == u || b == v) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (c == u || c == v) continue;
                int t[5] = {u, v, a, b, c};
                std::sort(t, t + 5);
                std::copy(t, t + 5, verts);
                if (c5codes.contains(induced_code(g, verts, 5))) ++total;
            }
        }
    }
    return total;
}

Pentagon pentagon_from_set(const SmallGraph& g, const std::array<int, 5>& verts) {
    SmallGraph h = g.induced(std::span<const int>(verts.data(), 5));
    static const PatternCodeSet c5codes(SmallGraph::cycle(5));
    if (!c5codes.contains(induced_code(g, verts.data(), 5)))
        throw std::invalid_argument("vertex set does not induce a C5");
    Pentagon p{};
    // start at the smallest vertex, walk toward its smaller neighbor
    int nb1 = -1, nb2 = -1;
    for (int j = 1; j < 5; ++j)
        if (h.edge(0, j)) (nb1 < 0 ? nb1 : nb2) = j;
    int next = std::min(nb1, nb2);
    p.z[0] = verts[0];
    int prev = 0;
    for (int i = 1; i < 5; ++i) {
        p.z[i] = verts[next];
        int succ = -1;
        for (int j = 0; j < 5; ++j)
            if (j != prev && j != next && h.edge(next, j)) succ = j;
        prev = next;
        next = succ;
    }
    return p;
}

namespace {

bool pentagon_adjacent(int i, int j) {
    int d = (j - i + 5) % 5;
    return d == 1 || d == 4;
}

void validate_pentagon(const SmallGraph& g, const Pentagon& p) {
    for (int i = 0; i < 5; ++i) {
        if (p.z[i] < 0 || p.z[i] >= g.n) throw std::invalid_argument("pentagon vertex out of range");
        for (int j = i + 1; j < 5; ++j)
            if (p.z[i] == p.z[j]) throw std::invalid_argument("pentagon vertices must be distinct");
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (g.edge(p.z[i], p.z[j]) != pentagon_adjacent(i, j))
                throw std::invalid_argument("labeled vertices do not form a cyclic C5");
}

}  // namespace

Rational local_density_7(const SmallGraph& g, const std::array<int, 5>& z_set, const PatternFamily& fam) {
    Pentagon p = pentagon_from_set(g, z_set);
    (void)p;
    if (g.n < 7) return rat(0);
    PatternCodeSet codes(fam);
    std::uint64_t in_z = 0;
    for (int v : z_set) in_z |= 1ull << v;
    std::uint64_t count = 0;
    int verts[7];
    for (int u = 0; u < g.n; ++u) {
        if (in_z >> u & 1) continue;
        for (int w = u + 1; w < g.n; ++w) {
            if (in_z >> w & 1) continue;
            int t[7] = {z_set[0], z_set[1], z_set[2], z_set[3], z_set[4], u, w};
            std::sort(t, t + 7);
            std::copy(t, t + 7, verts);
            if (codes.contains(induced_code(g, verts, 7))) ++count;
        }
    }
    return rat(BigInt(static_cast<unsigned long>(count)), binomial(g.n - 5, 2));
}

PentagonScore best_pentagon(const SmallGraph& g, const Rational& a, const PatternFamily& fam22111,
                            const PatternFamily& fam31111) {
    auto sets = induced_c5_sets(g);
    if (sets.empty()) throw std::invalid_argument("graph contains no induced C5");
    PatternCodeSet codes22(fam22111), codes31(fam31111);
    BigInt denom = g.n >= 7 ? binomial(g.n - 5, 2) : BigInt(1);

    bool have = false;
    PentagonScore best;
    int verts[7];
    for (const auto& zs : sets) {
        std::uint64_t c22 = 0, c31 = 0;
        if (g.n >= 7) {
            std::uint64_t in_z = 0;
            for (int v : zs) in_z |= 1ull << v;
            for (int u = 0; u < g.n; ++u) {
                if (in_z >> u & 1) continue;
                for (int w = u + 1; w < g.n; ++w) {
                    if (in_z >> w & 1) continue;
                    int t[7] = {zs[0], zs[1], zs[2], zs[3], zs[4], u, w};
                    std::sort(t, t + 7);
                    std::copy(t, t + 7, verts);
                    std::uint32_t code = induced_code(g, verts, 7);
                    if (codes22.contains(code)) ++c22;
                    if (codes31.contains(code)) ++c31;
                }
            }
        }
        Rational score = (rat(BigInt(static_cast<unsigned long>(c22)), BigInt(1)) -
                          a * rat(BigInt(static_cast<unsigned long>(c31)), BigInt(1))) /
                         Rational(denom);
        if (!have || score > best.score) {
            best.pentagon = pentagon_from_set(g, zs);
            best.score = score;
            have = true;
        }
    }
    return best;
}

PartitionAnalysis funky_analysis(const SmallGraph& g, const Pentagon& p) {
    validate_pentagon(g, p);
    PartitionAnalysis out;
    out.pentagon = p;
    std::vector<int> class_of(g.n, 0);  // 0 = X_0, 1..5 = class index + 1
    std::uint64_t in_z = 0;
    for (int v : p.z) in_z |= 1ull << v;
    for (int i = 0; i < 5; ++i) {
        class_of[p.z[i]] = i + 1;
        out.classes[i].push_back(p.z[i]);
    }
    for (int v = 0; v < g.n; ++v) {
        if (in_z >> v & 1) continue;
        int found = 0;
        for (int i = 0; i < 5; ++i) {
            bool match = true;
            for (int j = 0; j < 5 && match; ++j)
                if (j != i) match = g.edge(v, p.z[j]) == pentagon_adjacent(i, j);
            if (match) found = i + 1;  // classes are disjoint: at most one i matches
        }
        class_of[v] = found;
        if (found == 0)
            out.outside.push_back(v);
        else
            out.classes[found - 1].push_back(v);
    }
    for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());

    std::vector<std::uint64_t> df_count(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        if (class_of[u] == 0) continue;
        for (int v = u + 1; v < g.n; ++v) {
            if (class_of[v] == 0 || class_of[v] == class_of[u]) continue;
            if (g.edge(u, v) != pentagon_adjacent(class_of[u] - 1, class_of[v] - 1)) {
                out.funky_pairs.emplace_back(u, v);
                ++df_count[u];
                ++df_count[v];
            }
        }
    }
    BigInt n(g.n);
    out.x[0] = rat(BigInt(static_cast<unsigned long>(out.outside.size())), n);
    for (int i = 0; i < 5; ++i) out.x[i + 1] = rat(BigInt(static_cast<unsigned long>(out.classes[i].size())), n);
    out.f = rat(BigInt(static_cast<unsigned long>(out.funky_pairs.size())), n * n);
    out.df_per_vertex.reserve(g.n);
    for (int v = 0; v < g.n; ++v) out.df_per_vertex.push_back(rat(BigInt(static_cast<unsigned long>(df_count[v])), n));
    return out;
}

}  // namespace pentagon
