#include "pentagon/search.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "pentagon/canonical.hpp"
#include "pentagon/counting.hpp"

namespace pentagon {

namespace {

SmallGraph extend(const SmallGraph& parent, std::uint32_t mask) {
    SmallGraph child(parent.n + 1);
    for (int i = 0; i < parent.n; ++i)
        child.adj[i] = parent.adj[i] | (static_cast<std::uint64_t>(mask >> i & 1u) << parent.n);
    child.adj[parent.n] = mask;
    return child;
}

// Extends every parent by one vertex, deduplicates by canonical certificate,
// and hands each new class to sink in deterministic (parent, mask) order.
// Canonicalization is parallelized per chunk; the merge stays sequential.
void extend_level(const std::vector<SmallGraph>& parents, int threads,
                  const std::function<void(const SmallGraph&)>& sink) {
    if (parents.empty()) return;
    int m = parents.front().n;
    std::uint32_t masks = 1u << m;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(parents.size() * 4);

    std::size_t chunk_size = std::max<std::size_t>(static_cast<std::size_t>(threads) * 8, 64);
    std::vector<std::vector<std::uint64_t>> certs(chunk_size, std::vector<std::uint64_t>(masks));
    for (std::size_t chunk_begin = 0; chunk_begin < parents.size(); chunk_begin += chunk_size) {
        std::size_t chunk_end = std::min(chunk_begin + chunk_size, parents.size());
        auto work = [&](int worker) {
            for (std::size_t p = chunk_begin + worker; p < chunk_end; p += threads)
                for (std::uint32_t mask = 0; mask < masks; ++mask)
                    certs[p - chunk_begin][mask] = canonical_code(extend(parents[p], mask));
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        for (std::size_t p = chunk_begin; p < chunk_end; ++p)
            for (std::uint32_t mask = 0; mask < masks; ++mask)
                if (seen.insert(certs[p - chunk_begin][mask]).second) sink(extend(parents[p], mask));
    }
}

int resolve_threads(int threads) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    return threads <= 0 ? 1 : threads;
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace

void for_each_graph_class(int n, const std::function<void(const SmallGraph&)>& fn, int threads) {
    if (n < 1 || n > 10) throw std::invalid_argument("for_each_graph_class supports 1 <= n <= 10");
    threads = resolve_threads(threads);
    std::vector<SmallGraph> level = {SmallGraph::empty(1)};
    if (n == 1) {
        fn(level.front());
        return;
    }
    for (int m = 1; m < n; ++m) {
        std::vector<SmallGraph> next_level;
        bool last = m + 1 == n;
        extend_level(level, threads, [&](const SmallGraph& g) {
            if (last)
                fn(g);
            else
                next_level.push_back(g);
        });
        level = std::move(next_level);
    }
}

std::uint64_t count_graph_classes(int n, int threads) {
    std::uint64_t count = 0;
    for_each_graph_class(n, [&](const SmallGraph&) { ++count; }, threads);
    return count;
}

SearchResult exhaustive_c(int n, int threads) {
    if (n < 5 || n > 10) throw std::invalid_argument("exhaustive_c supports 5 <= n <= 10");
    static const PatternCodeSet c5codes(SmallGraph::cycle(5));
    SearchResult res;
    res.n = n;
    res.exhaustive = true;
    std::vector<SmallGraph> extremal;
    for_each_graph_class(n, [&](const SmallGraph& g) {
        ++res.graphs_examined;
        std::uint64_t count = count_code_set(g, c5codes);
        if (count > res.best_count) {
            res.best_count = count;
            extremal.clear();
        }
        if (count == res.best_count && res.best_count > 0) extremal.push_back(g);
    }, threads);
    for (const auto& g : extremal) {
        if (induced_c5_sets(g).size() != res.best_count) throw std::logic_error("witness recount mismatch");
        res.witnesses.push_back(to_graph6(g));
    }
    return res;
}

namespace {

struct C5Profile {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_vertex;
    std::vector<std::uint64_t> per_pair;  // n*n matrix

    static C5Profile of(const SmallGraph& g) {
        C5Profile pr;
        pr.per_vertex.assign(g.n, 0);
        pr.per_pair.assign(static_cast<std::size_t>(g.n) * g.n, 0);
        for (const auto& s : induced_c5_sets(g)) {
            ++pr.total;
            for (int i = 0; i < 5; ++i) {
                ++pr.per_vertex[s[i]];
                for (int j = i + 1; j < 5; ++j) {
                    ++pr.per_pair[static_cast<std::size_t>(s[i]) * g.n + s[j]];
                    ++pr.per_pair[static_cast<std::size_t>(s[j]) * g.n + s[i]];
                }
            }
        }
        return pr;
    }
};

}  // namespace

SearchResult hill_climb(int n, std::uint64_t seed, std::uint64_t iterations) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("hill_climb supports 1 <= n <= 64");
    SearchResult res;
    res.n = n;
    res.seed = seed;
    res.iterations = iterations;
    SplitMix64 rng{seed};

    auto random_start = [&] {
        SmallGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next() & 1u) g.add_edge(u, v);
        return g;
    };

    SmallGraph cur = random_start();
    C5Profile profile = C5Profile::of(cur);
    res.best_count = profile.total;
    res.witnesses = {to_graph6(cur)};

    const std::uint64_t plateau_cap = static_cast<std::uint64_t>(n) * n;
    std::uint64_t plateau_left = plateau_cap;

    for (std::uint64_t step = 0; step < iterations; ++step) {
        ++res.graphs_examined;
        // steepest ascent over edge flips and vertex duplications; count-neutral
        // flips are kept as plateau moves
        std::int64_t best_delta = 0;
        int best_kind = -1, best_u = -1, best_v = -1;
        std::vector<std::pair<int, int>> neutral_flips;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                std::uint64_t before = profile.per_pair[static_cast<std::size_t>(u) * n + v];
                cur.toggle_edge(u, v);
                std::int64_t delta = static_cast<std::int64_t>(pair_c5_count(cur, u, v)) -
                                     static_cast<std::int64_t>(before);
                cur.toggle_edge(u, v);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_kind = 0;
                    best_u = u;
                    best_v = v;
                } else if (delta == 0) {
                    neutral_flips.emplace_back(u, v);
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                // replace v by a twin of u: gain C5^u - C5^{uv}, lose C5^v
                std::int64_t delta = static_cast<std::int64_t>(profile.per_vertex[u]) -
                                     static_cast<std::int64_t>(profile.per_pair[static_cast<std::size_t>(u) * n + v]) -
                                     static_cast<std::int64_t>(profile.per_vertex[v]);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_kind = 1;
                    best_u = u;
                    best_v = v;
                }
            }
        }
        if (best_kind == 1) {
            for (int w = 0; w < n; ++w) {
                if (w == best_u || w == best_v) continue;
                if (cur.edge(best_v, w)) cur.remove_edge(best_v, w);
                if (cur.edge(best_u, w)) cur.add_edge(best_v, w);
            }
            if (cur.edge(best_u, best_v)) cur.remove_edge(best_u, best_v);
            plateau_left = plateau_cap;
        } else if (best_kind == 0) {
            cur.toggle_edge(best_u, best_v);
            plateau_left = plateau_cap;
        } else if (!neutral_flips.empty() && plateau_left > 0) {
            // sideways step: neutral flips can assemble structure inside classes
            auto [u, v] = neutral_flips[rng.next() % neutral_flips.size()];
            cur.toggle_edge(u, v);
            --plateau_left;
        } else {
            cur = random_start();
            plateau_left = plateau_cap;
        }
        profile = C5Profile::of(cur);
        if (profile.total > res.best_count) {
            res.best_count = profile.total;
            res.witnesses = {to_graph6(cur)};
        }
    }
    return res;
}

}  // namespace pentagon
