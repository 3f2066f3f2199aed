#include "pentagon/blowup.hpp"

#include <mutex>
#include <unordered_map>

namespace pentagon {

int BlowupTree::total_vertices() const {
    if (is_leaf()) return graph.n;
    int total = 0;
    for (const auto& c : children) total += c.total_vertices();
    return total;
}

BlowupTree BlowupTree::leaf(SmallGraph g) { return BlowupTree{std::move(g), {}}; }

BlowupTree BlowupTree::node(SmallGraph base, std::vector<BlowupTree> parts) {
    if (static_cast<int>(parts.size()) != base.n)
        throw std::invalid_argument("blow-up node needs one child per base vertex");
    return BlowupTree{std::move(base), std::move(parts)};
}

BlowupTree BlowupTree::iterated_c5(int k) {
    if (k < 1) throw std::invalid_argument("iterated_c5 requires k >= 1");
    if (k == 1) return leaf(SmallGraph::cycle(5));
    std::vector<BlowupTree> parts;
    parts.reserve(5);
    for (int i = 0; i < 5; ++i) parts.push_back(iterated_c5(k - 1));
    return node(SmallGraph::cycle(5), std::move(parts));
}

BlowupTree BlowupTree::pentagon(std::array<SmallGraph, 5> inners) {
    std::vector<BlowupTree> parts;
    parts.reserve(5);
    for (auto& g : inners) parts.push_back(leaf(std::move(g)));
    return node(SmallGraph::cycle(5), std::move(parts));
}

SmallGraph realize(const BlowupTree& t) {
    if (t.is_leaf()) return t.graph;
    int total = t.total_vertices();
    if (total > kMaxVertices) throw std::invalid_argument("blow-up exceeds 64 vertices");
    SmallGraph g(total);
    std::vector<int> offset(t.children.size() + 1, 0);
    std::vector<SmallGraph> parts;
    parts.reserve(t.children.size());
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        parts.push_back(realize(t.children[i]));
        offset[i + 1] = offset[i] + parts[i].n;
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int u = 0; u < parts[i].n; ++u)
            for (int v = u + 1; v < parts[i].n; ++v)
                if (parts[i].edge(u, v)) g.add_edge(offset[i] + u, offset[i] + v);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!t.graph.edge(static_cast<int>(i), static_cast<int>(j))) continue;
            for (int u = 0; u < parts[i].n; ++u)
                for (int v = 0; v < parts[j].n; ++v) g.add_edge(offset[i] + u, offset[j] + v);
        }
    return g;
}

BigInt recursion_value(long n) {
    if (n < 0) throw std::invalid_argument("recursion_value requires n >= 0");
    static std::mutex mu;
    static std::unordered_map<long, BigInt> memo;
    if (n < 5) return 0;
    {
        std::lock_guard lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    long q = n / 5, r = n % 5;
    // balanced parts, descending: r copies of q+1, then 5-r copies of q
    BigInt product = big_pow(BigInt(q + 1), static_cast<unsigned long>(r)) *
                     big_pow(BigInt(q), static_cast<unsigned long>(5 - r));
    BigInt value = product + r * recursion_value(q + 1) + (5 - r) * recursion_value(q);
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(value)).first->second;
}

std::array<int, 5> FivePartition::sizes() const {
    std::array<int, 5> s{};
    for (int i = 0; i < 5; ++i) s[i] = static_cast<int>(classes[i].size());
    return s;
}

DetectResult detect_5_partition(const SmallGraph& g) {
    if (g.n < 5) throw std::invalid_argument("detect_5_partition requires n >= 5");
    DetectResult out;
    auto anchors = induced_c5_sets(g);
    if (anchors.empty()) {
        out.failure = {0, std::min(1, g.n - 1), "no induced C5 to anchor a pentagon partition"};
        return out;
    }
    bool have_failure = false;
    for (const auto& zs : anchors) {
        PartitionAnalysis fa = funky_analysis(g, pentagon_from_set(g, zs));
        if (fa.outside.empty() && fa.funky_pairs.empty()) {
            FivePartition part;
            part.classes = fa.classes;
            out.partition = std::move(part);
            return out;
        }
        if (!have_failure) {
            have_failure = true;
            if (!fa.funky_pairs.empty()) {
                out.failure = {fa.funky_pairs[0].first, fa.funky_pairs[0].second,
                               "pair contradicts the pentagon pattern of the anchor C5"};
            } else {
                out.failure = {fa.outside[0], fa.pentagon.z[0],
                               "vertex matches no class of the anchor C5"};
            }
        }
    }
    return out;
}

ComposeCheck compose_identity_check(const SmallGraph& outer, const SmallGraph& h) {
    if (outer.n * h.n > kMaxVertices) throw std::invalid_argument("composition exceeds 64 vertices");
    std::vector<BlowupTree> parts;
    parts.reserve(outer.n);
    for (int i = 0; i < outer.n; ++i) parts.push_back(BlowupTree::leaf(h));
    SmallGraph composed = realize(BlowupTree::node(outer, std::move(parts)));
    SmallGraph c5 = SmallGraph::cycle(5);
    ComposeCheck chk;
    chk.lhs = count_induced(composed, c5);
    std::uint64_t hn5 = 1;
    for (int i = 0; i < 5; ++i) hn5 *= static_cast<std::uint64_t>(h.n);
    chk.rhs = static_cast<std::uint64_t>(outer.n) * count_induced(h, c5) + count_induced(outer, c5) * hn5;
    return chk;
}

}  // namespace pentagon
