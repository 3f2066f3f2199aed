#include "pentagon/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pentagon {

namespace {

// smallest integer S with (cap/steps) * S >= threshold
long feasibility_floor(const GridSpec& spec, const Rational& relax) {
    Rational threshold = rat(81, 1000) - relax;
    Rational scaled = threshold * spec.steps / spec.cap;
    BigInt t;
    mpz_cdiv_q(t.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return t.get_si();
}

Rational relax_for_mode(const GridSpec& spec, FeasMode mode) {
    return mode == FeasMode::Relaxed ? 2 * spec.t() : rat(0);
}

struct WorkerBest {
    std::int64_t value = -1;
    NeighborProfile profile{};
    std::uint64_t evaluated = 0;
};

// Scans all u4 completions of (u0..u3); F(u4) = A + B*u4 + u4^2 (s-u4)^2.
void scan_block(const std::array<std::int64_t, 5>& u, std::int64_t s, long T, bool constrained,
                const std::int64_t* quartic, std::int64_t min_u4, WorkerBest& best) {
    std::int64_t u0 = u[0], u1 = u[1], u2 = u[2], u3 = u[3];
    std::int64_t v0 = s - u0, v1 = s - u1, v2 = s - u2, v3 = s - u3;
    std::int64_t lo = min_u4, hi = s;
    if (constrained) {
        if (v0 + v3 + u1 + u2 < T) return;               // the u4-free constraint
        lo = std::max({lo, T - v2 - v0 - u3, T - v3 - v1 - u0});
        hi = std::min({hi, s - T + v1 + u2 + u3, s - T + v2 + u0 + u1});
    }
    if (lo > hi) return;
    std::int64_t a = 4 * (u0 * v1 * v2 * u3 + s * (u2 * v3 * u0 + u3 * v0 * u1)) +
                     u0 * u0 * v0 * v0 + u1 * u1 * v1 * v1 + u2 * u2 * v2 * v2 + u3 * u3 * v3 * v3;
    std::int64_t b = 4 * (u1 * v2 * v3 + v0 * v1 * u2 - u2 * v3 * u0 - u3 * v0 * u1);
    std::int64_t block_best = -1;
    std::int64_t block_x = lo;
    for (std::int64_t x = lo; x <= hi; ++x) {
        std::int64_t f = a + b * x + quartic[x];
        if (f > block_best) {
            block_best = f;
            block_x = x;
        }
    }
    best.evaluated += static_cast<std::uint64_t>(hi - lo + 1);
    if (block_best > best.value) {
        best.value = block_best;
        best.profile.u = {static_cast<int>(u0), static_cast<int>(u1), static_cast<int>(u2),
                          static_cast<int>(u3), static_cast<int>(block_x)};
    }
}

}  // namespace

std::int64_t objective_lattice(const NeighborProfile& p, int steps) {
    std::int64_t s = steps;
    std::int64_t u[5], v[5];
    for (int i = 0; i < 5; ++i) {
        u[i] = p.u[i];
        v[i] = s - u[i];
        if (u[i] < 0 || u[i] > s) throw std::invalid_argument("lattice coordinate out of range");
    }
    std::int64_t cross = 0, squares = 0;
    for (int i = 0; i < 5; ++i) {
        cross += u[i] * v[(i + 1) % 5] * v[(i + 2) % 5] * u[(i + 3) % 5];
        squares += u[i] * u[i] * v[i] * v[i];
    }
    return 4 * cross + squares;
}

Rational objective_exact(const NeighborProfile& p, const GridSpec& spec) {
    Rational unit = spec.t();  // cap / s
    return objective_lattice(p, spec.steps) * unit * unit * unit * unit / 4;
}

bool feasible(const NeighborProfile& p, const GridSpec& spec, const Rational& relax) {
    long T = feasibility_floor(spec, relax);
    for (int i = 0; i < 5; ++i) {
        long sum = (spec.steps - p.u[(i + 1) % 5]) + (spec.steps - p.u[(i + 4) % 5]) + p.u[(i + 2) % 5] +
                   p.u[(i + 3) % 5];
        if (sum < T) return false;
    }
    return true;
}

GridResult grid_max(const GridSpec& spec, FeasMode mode, int threads, bool symmetry) {
    if (spec.steps < 1 || spec.steps > 400) throw std::invalid_argument("steps must lie in [1, 400]");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    const std::int64_t s = spec.steps;
    const bool constrained = mode != FeasMode::Unconstrained;
    const long T = constrained ? feasibility_floor(spec, relax_for_mode(spec, mode)) : 0;

    std::vector<std::int64_t> quartic(s + 1);
    for (std::int64_t x = 0; x <= s; ++x) quartic[x] = x * x * (s - x) * (s - x);

    auto run_stripe = [&](int worker, WorkerBest& best) {
        std::array<std::int64_t, 5> u{};
        for (std::int64_t u0 = worker; u0 <= s; u0 += threads) {
            u[0] = u0;
            std::int64_t lo123 = symmetry ? u0 : 0;
            for (u[1] = lo123; u[1] <= s; ++u[1])
                for (u[2] = lo123; u[2] <= s; ++u[2])
                    for (u[3] = lo123; u[3] <= s; ++u[3]) {
                        std::int64_t min_u4 = symmetry ? std::max(u0, u[1]) : 0;
                        scan_block(u, s, T, constrained, quartic.data(), min_u4, best);
                    }
        }
    };

    std::vector<WorkerBest> results(threads);
    if (threads == 1) {
        run_stripe(0, results[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(run_stripe, w, std::ref(results[w]));
        for (auto& th : pool) th.join();
    }

    // deterministic merge: max value, then lexicographically least profile
    WorkerBest merged;
    for (const auto& r : results) {
        merged.evaluated += r.evaluated;
        if (r.value > merged.value || (r.value == merged.value && r.profile.u < merged.profile.u))
            merged = WorkerBest{r.value, r.profile, merged.evaluated};
    }

    GridResult out;
    out.mode = mode;
    out.steps = spec.steps;
    out.symmetry_reduced = symmetry;
    out.evaluated = merged.evaluated;
    if (merged.value < 0) {
        out.max_value = rat(0);  // no feasible lattice point
        return out;
    }
    out.argmax = merged.profile;
    out.max_value = objective_exact(merged.profile, spec);
    return out;
}

Rational gradient_bound(const GridSpec& spec) {
    Rational cap3 = spec.cap * spec.cap * spec.cap;
    return cap3 + 2 * cap3 / 27;
}

X0ClaimReport certify_x0_claim(const GridSpec& spec, const Rational& lipschitz,
                               const GridResult& strict_result) {
    if (strict_result.steps != spec.steps || strict_result.mode != FeasMode::Strict)
        throw std::invalid_argument("certify_x0_claim needs the strict grid result for this spec");
    X0ClaimReport rep;
    rep.steps = spec.steps;
    rep.grid_max_value = strict_result.max_value;
    rep.lipschitz = lipschitz;
    rep.correction = rat(5, 2) * spec.t() * lipschitz;
    rep.total = rep.grid_max_value + rep.correction;
    rep.threshold = rat(1, 624);
    rep.printed = rat(158, 100000);
    rep.pass_threshold = rep.total < rep.threshold;
    rep.pass_printed = rep.total < rep.printed;
    return rep;
}

}  // namespace pentagon
