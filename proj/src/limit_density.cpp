#include "pentagon/limit_density.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "pentagon/canonical.hpp"

namespace pentagon {

namespace {

// Enumerates assignments phi: V(P) -> [b] consistent with the base graph
// (cross-class pairs must match base adjacency; same-class pairs are free),
// invoking fn(phi) for each complete assignment including the constant ones.
template <typename Fn>
void for_each_compatible(const SmallGraph& p, const SmallGraph& base, std::vector<int>& phi, int depth, Fn&& fn) {
    if (depth == p.n) {
        fn(phi);
        return;
    }
    for (int c = 0; c < base.n; ++c) {
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j) {
            if (phi[j] == c) continue;
            ok = p.edge(j, depth) == base.edge(phi[j], c);
        }
        if (!ok) continue;
        phi[depth] = c;
        for_each_compatible(p, base, phi, depth + 1, fn);
    }
}

struct LimitSolver {
    SmallGraph base;
    std::map<std::vector<std::uint8_t>, Rational> memo;

    Rational labeled_density(const SmallGraph& p) {
        if (p.n <= 1) return rat(1);
        auto cert = canonical_form(p).certificate;
        if (auto it = memo.find(cert); it != memo.end()) return it->second;

        // densities of induced subgraphs by vertex subset, resolved once
        std::vector<Rational> sub(std::size_t{1} << p.n, rat(1));
        for (std::uint32_t mask = 0; mask < sub.size(); ++mask) {
            int popcount = __builtin_popcount(mask);
            if (popcount < 2 || popcount == p.n) continue;
            std::vector<int> verts;
            for (int v = 0; v < p.n; ++v)
                if (mask >> v & 1) verts.push_back(v);
            sub[mask] = labeled_density(p.induced(verts));
        }

        Rational sum(0);
        std::vector<int> phi(p.n);
        for_each_compatible(p, base, phi, 0, [&](const std::vector<int>& assignment) {
            std::uint32_t class_mask[kMaxVertices] = {};
            bool constant = true;
            for (int v = 0; v < p.n; ++v) {
                class_mask[assignment[v]] |= 1u << v;
                if (assignment[v] != assignment[0]) constant = false;
            }
            if (constant) return;
            Rational term(1);
            for (int c = 0; c < base.n; ++c)
                if (__builtin_popcount(class_mask[c]) >= 2) term *= sub[class_mask[c]];
            sum += term;
        });

        Rational d = sum / Rational(big_pow(BigInt(base.n), p.n) - base.n);
        memo.emplace(std::move(cert), d);
        return d;
    }
};

std::mutex limit_mutex;

}  // namespace

PatternFamily pattern_family(const SmallGraph& base, const std::vector<int>& multiplicities,
                             std::string label) {
    if (base.n < 1 || base.n > 7) throw std::invalid_argument("base must have 1..7 vertices");
    if (static_cast<int>(multiplicities.size()) != base.n)
        throw std::invalid_argument("multiplicity vector length must equal base vertex count");
    for (int m : multiplicities)
        if (m < 0) throw std::invalid_argument("negative multiplicity");
    int total = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    if (total > 7) throw std::invalid_argument("pattern exceeds 7 vertices");

    std::vector<SmallGraph> members;
    std::vector<std::vector<std::uint8_t>> certs;
    std::vector<int> placement = multiplicities;
    std::sort(placement.begin(), placement.end());
    do {
        std::vector<int> offset(base.n + 1, 0);
        for (int c = 0; c < base.n; ++c) offset[c + 1] = offset[c] + placement[c];
        SmallGraph skeleton(total);
        for (int a = 0; a < base.n; ++a)
            for (int b = a + 1; b < base.n; ++b) {
                if (!base.edge(a, b)) continue;
                for (int u = offset[a]; u < offset[a + 1]; ++u)
                    for (int v = offset[b]; v < offset[b + 1]; ++v) skeleton.add_edge(u, v);
            }
        std::vector<std::pair<int, int>> inner_pairs;
        for (int c = 0; c < base.n; ++c)
            for (int u = offset[c]; u < offset[c + 1]; ++u)
                for (int v = u + 1; v < offset[c + 1]; ++v) inner_pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << inner_pairs.size()); ++mask) {
            SmallGraph g = skeleton;
            for (std::size_t i = 0; i < inner_pairs.size(); ++i)
                if (mask >> i & 1) g.add_edge(inner_pairs[i].first, inner_pairs[i].second);
            auto cert = canonical_form(g).certificate;
            if (std::find(certs.begin(), certs.end(), cert) == certs.end()) {
                certs.push_back(std::move(cert));
                members.push_back(std::move(g));
            }
        }
    } while (std::next_permutation(placement.begin(), placement.end()));
    return PatternFamily{std::move(label), std::move(members)};
}

const PatternFamily& c5_family() {
    static const PatternFamily fam = pattern_family(SmallGraph::cycle(5), {1, 1, 1, 1, 1}, "C5");
    return fam;
}

const PatternFamily& c22111_family() {
    static const PatternFamily fam = pattern_family(SmallGraph::cycle(5), {2, 2, 1, 1, 1}, "C22111");
    return fam;
}

const PatternFamily& c31111_family() {
    static const PatternFamily fam = pattern_family(SmallGraph::cycle(5), {3, 1, 1, 1, 1}, "C31111");
    return fam;
}

LimitDensityResult limit_density(const SmallGraph& base, const PatternFamily& target) {
    if (base.n < 2) throw std::invalid_argument("base needs at least 2 vertices");
    for (const auto& m : target.members)
        if (m.n < 1) throw std::invalid_argument("empty pattern");

    // shared memo across calls; densities depend on the base, so key by it
    static std::map<std::vector<std::uint8_t>, LimitSolver> solvers;
    std::lock_guard lock(limit_mutex);
    LimitSolver& solver = solvers.try_emplace(canonical_form(base).certificate, LimitSolver{base, {}}).first->second;

    LimitDensityResult out{target, rat(0), {}};
    for (const auto& m : target.members) {
        Rational labeled = solver.labeled_density(m);
        Rational unlabeled = labeled * Rational(factorial(m.n)) / Rational(BigInt(automorphism_count(m)));
        out.per_member.push_back(unlabeled);
        out.density += unlabeled;
    }
    return out;
}

namespace {

// Exact count of induced embeddings of p into C5^{depth x} (labeled copies).
struct FiniteCounter {
    std::map<std::pair<std::vector<std::uint8_t>, int>, BigInt> memo;
    SmallGraph base = SmallGraph::cycle(5);

    BigInt embeddings(const SmallGraph& p, int depth) {
        if (p.n == 0) return 1;
        if (depth == 0) return p.n == 1 ? 1 : 0;
        auto key = std::make_pair(canonical_form(p).certificate, depth);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::vector<BigInt> sub(std::size_t{1} << p.n, BigInt(1));
        for (std::uint32_t mask = 1; mask < sub.size(); ++mask) {
            std::vector<int> verts;
            for (int v = 0; v < p.n; ++v)
                if (mask >> v & 1) verts.push_back(v);
            sub[mask] = embeddings(p.induced(verts), depth - 1);
        }

        BigInt total = 0;
        std::vector<int> phi(p.n);
        for_each_compatible(p, base, phi, 0, [&](const std::vector<int>& assignment) {
            std::uint32_t class_mask[kMaxVertices] = {};
            for (int v = 0; v < p.n; ++v) class_mask[assignment[v]] |= 1u << v;
            BigInt term = 1;
            for (int c = 0; c < base.n; ++c)
                if (class_mask[c] != 0) term *= sub[class_mask[c]];
            total += term;
        });
        memo.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

Rational finite_density(int k, const PatternFamily& target) {
    if (k < 1) throw std::invalid_argument("finite_density requires k >= 1");
    static std::mutex mu;
    static FiniteCounter counter;
    std::lock_guard lock(mu);
    BigInt n = big_pow(BigInt(5), static_cast<unsigned long>(k));
    Rational total(0);
    for (const auto& m : target.members) {
        BigInt labeled = counter.embeddings(m, k);
        total += rat(labeled, automorphism_count(m) * binomial(n, m.n));
    }
    return total;
}

}  // namespace pentagon
