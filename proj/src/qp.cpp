#include "pentagon/qp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pentagon {

namespace {

const Rational kEnclosureWidth = rat(1, BigInt("1000000000000"));  // 1e-12

// g(x1, y) = 8*x1*y - 3.92*y^2 - 3.98*x1^2
Rational constraint_g(const Rational& x1, const Rational& y) {
    return rat(8) * x1 * y - rat(98, 25) * y * y - rat(199, 50) * x1 * x1;
}

// Certified enclosure of the root of the quadratic q(x) = a x^2 + b x + c in
// [lo, hi]; q must change sign on the bracket. Rational bisection.
CertifiedInterval bisect_root(const Rational& a, const Rational& b, const Rational& c, Rational lo, Rational hi) {
    auto eval = [&](const Rational& x) -> Rational { return a * x * x + b * x + c; };
    Rational flo = eval(lo), fhi = eval(hi);
    if (sgn(flo) == 0) return {lo, lo};
    if (sgn(fhi) == 0) return {hi, hi};
    if (sgn(flo) == sgn(fhi)) throw std::logic_error("bisection bracket does not straddle a root");
    while (hi - lo > kEnclosureWidth) {
        Rational mid = (lo + hi) / 2;
        Rational fmid = eval(mid);
        if (sgn(fmid) == 0) return {mid, mid};
        if (sgn(fmid) == sgn(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

// min/max x1 subject to exists y: g(x1, y) >= rhs, x1 + 4y <= 1, x1, y >= 0.
// Cases: the quadratic constraint is always active at the optimum (the
// polytope vertices are infeasible for rhs > 0); either the inner critical
// point y = 50*x1/49 is admissible or y caps at (1 - x1)/4 (x0 = 0).
std::optional<ReducedSolution> solve_x1(bool maximize, const Rational& rhs) {
    if (sgn(rhs) <= 0) throw std::invalid_argument("rhs must be positive");

    // case A: y at cap -> q(x1) = -6.225 x1^2 + 2.49 x1 - 0.245 - rhs = 0
    Rational qa = rat(-249, 40), qb = rat(249, 100), qc = rat(-49, 200) - rhs;
    // vertex at x1 = 1/5, vertex value 0.004 - rhs
    Rational vertex_value = rat(1, 250) - rhs;
    std::optional<CertifiedInterval> cap_root;
    if (sgn(vertex_value) > 0) {
        cap_root = maximize ? bisect_root(qa, qb, qc, rat(1, 5), rat(1))
                            : bisect_root(qa, qb, qc, rat(0), rat(1, 5));
    } else if (sgn(vertex_value) == 0) {
        cap_root = CertifiedInterval{rat(1, 5), rat(1, 5)};
    }

    // case B: interior critical point y* = 50 x1 / 49, admissible only while
    // x1 + 4y* <= 1; g(x1, y*) = (249/2450) x1^2 = rhs
    Rational x1_interior_sq = rhs * rat(2450, 249);
    // admissibility threshold: x1 <= 49/249; compare x1^2 against (49/249)^2
    bool interior_admissible = x1_interior_sq <= rat(49 * 49, 249 * 249);

    if (!cap_root && !interior_admissible) return std::nullopt;

    ReducedSolution sol;
    sol.feasible = true;
    if (cap_root) {
        sol.interval = *cap_root;
        // witness on the feasible side of the root, constraints re-checked exactly
        Rational wx = maximize ? cap_root->lo : cap_root->hi;
        Rational wy = (rat(1) - wx) / 4;
        if (constraint_g(wx, wy) < rhs) throw std::logic_error("witness fails the quadratic constraint");
        sol.witness = {{"x1", wx}, {"y", wy}, {"x0", rat(0)}, {"f", rat(0)}};
    }
    if (interior_admissible) {
        // enclose sqrt(rhs * 2450/249); for min x1 this dominates only if smaller
        CertifiedInterval root = bisect_root(rat(1), rat(0), -x1_interior_sq, rat(0), rat(1));
        bool better = !cap_root || (maximize ? root.lo > sol.interval.hi : root.hi < sol.interval.lo);
        if (better) {
            sol.interval = root;
            Rational wx = maximize ? root.lo : root.hi;
            Rational wy = wx * rat(50, 49);
            Rational wx0 = rat(1) - wx - wy * 4;
            if (sgn(wx0) < 0) wy = (rat(1) - wx) / 4, wx0 = rat(0);  // enclosure straddles the cap boundary
            if (constraint_g(wx, wy) < rhs) {
                if (!cap_root) throw std::logic_error("no exact witness for interior case");
            } else {
                sol.witness = {{"x1", wx}, {"y", wy}, {"x0", wx0}, {"f", rat(0)}};
            }
        }
    }
    return sol;
}

}  // namespace

FlagConstants FlagConstants::published() {
    return FlagConstants{
        rat(3846157, 100000000),
        rat(BigInt("1349894760355389179787709186391"), BigInt("420000000000000000000000000000000")),
        rat(398, 100),
    };
}

Rational derive_main_threshold(const FlagConstants& fc) {
    return fc.diff_lower / 21 / fc.c5_upper;
}

ReducedSolution solve_reduced(const ReducedProgram& p) {
    if (sgn(p.rhs) <= 0) throw std::invalid_argument("rhs must be positive");
    switch (p.objective) {
        case Objective::MinX1:
        case Objective::MaxX1: {
            auto sol = solve_x1(p.objective == Objective::MaxX1, p.rhs);
            if (!sol) return ReducedSolution{};  // infeasible, reported as such
            return *sol;
        }
        case Objective::MaxX0: {
            // x1 = ... = x5 = y, f = 0: constraint becomes 0.1 y^2 >= rhs with
            // x0 = 1 - 5y; maximal x0 at the minimal feasible y = sqrt(10 rhs).
            Rational y_sq = p.rhs * 10;
            if (y_sq > rat(1, 25)) return ReducedSolution{};  // even x0 = 0 infeasible
            CertifiedInterval y_root = bisect_root(rat(1), rat(0), -y_sq, rat(0), rat(1, 5));
            ReducedSolution sol;
            sol.feasible = true;
            sol.interval = {rat(1) - 5 * y_root.hi, rat(1) - 5 * y_root.lo};
            Rational wy = std::min(y_root.hi, rat(1, 5));  // y >= sqrt(10 rhs): feasible side
            if (rat(1, 10) * wy * wy < p.rhs) throw std::logic_error("witness fails the constraint");
            sol.witness = {{"x0", rat(1) - 5 * wy}, {"x1", wy}, {"y", wy}, {"f", rat(0)}};
            return sol;
        }
        case Objective::MaxF: {
            // x0 = 0, all x_i = 1/5: constraint is 0.004 - 2f >= rhs, exact
            Rational fmax = (rat(1, 250) - p.rhs) / 2;
            if (sgn(fmax) < 0) return ReducedSolution{};
            ReducedSolution sol;
            sol.feasible = true;
            sol.interval = {fmax, fmax};
            sol.witness = {{"x0", rat(0)}, {"x1", rat(1, 5)}, {"y", rat(1, 5)}, {"f", fmax}};
            return sol;
        }
    }
    throw std::logic_error("unknown objective");
}

Rational main_constraint_lhs(const SymmetrySample& s) {
    Rational cross(0), squares(0);
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) cross += s.x[i] * s.x[j];
        squares += s.x[i] * s.x[i];
    }
    return rat(2) * cross - rat(2) * s.f - rat(199, 50) * squares;
}

bool symmetrization_check(const SymmetrySample& sample, const Rational& rhs) {
    Rational total = sample.f < 0 ? rat(-1) : sample.x[0];
    for (int i = 0; i <= 5; ++i) {
        if (sgn(sample.x[i]) < 0) total = rat(-1);
        if (i > 0) total += sample.x[i];
    }
    if (total != rat(1) || main_constraint_lhs(sample) <= rhs)
        throw std::invalid_argument("sample is not feasible for the main constraint");

    SymmetrySample sym;
    sym.x[0] = sample.x[0];
    sym.x[1] = sample.x[1];
    Rational y = (rat(1) - sample.x[0] - sample.x[1]) / 4;
    for (int i = 2; i <= 5; ++i) sym.x[i] = y;
    sym.f = rat(0);
    return main_constraint_lhs(sym) > rhs;
}

Rational max_funky_degree_bound(const FlagConstants& fc, const Rational& x1min) {
    if (sgn(x1min) < 0 || x1min > rat(1, 5))
        throw std::invalid_argument("x1min must lie in [0, 1/5]");
    return rat(1) - (rat(1) + fc.a) * x1min;
}

}  // namespace pentagon
