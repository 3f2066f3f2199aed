#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pentagon/rational.hpp"

namespace pentagon {

// Uniform grid over a_i in [0, cap] with s steps per axis (s+1 values
// including both boundaries); b_i = cap - a_i.
struct GridSpec {
    int steps = 100;
    Rational cap = rat(21, 100);
    Rational t() const { return cap / steps; }  // box side
};

// Lattice coordinates of a_1..a_5; the implied b_i coordinate is steps - u[i].
struct NeighborProfile {
    std::array<int, 5> u{};
};

enum class FeasMode { Strict, Relaxed, Unconstrained };

struct GridResult {
    Rational max_value;
    NeighborProfile argmax;
    std::uint64_t evaluated = 0;  // feasible lattice points evaluated
    FeasMode mode = FeasMode::Strict;
    int steps = 0;
    bool symmetry_reduced = false;
};

// Integer lattice value F with f = F * (cap/s)^4 / 4:
//   F = 4 * sum_i u_i v_{i+1} v_{i+2} u_{i+3} + sum_i u_i^2 v_i^2, v_i = s - u_i.
std::int64_t objective_lattice(const NeighborProfile& p, int steps);

// Exact rational objective value at a lattice point.
Rational objective_exact(const NeighborProfile& p, const GridSpec& spec);

// All five cyclic constraints b_{i+1} + b_{i+4} + a_{i+2} + a_{i+3} >= 0.081 - relax,
// compared exactly after cross-multiplying into integers.
bool feasible(const NeighborProfile& p, const GridSpec& spec, const Rational& relax);

// Exact maximum of the objective over lattice points passing the mode's
// feasibility filter (relax = 0 strict, 2t relaxed, none unconstrained).
// Deterministic argmax (lexicographically least profile); result independent
// of the worker count. Symmetry reduction restricts enumeration to a covering
// set of dihedral orbit representatives and must not change the max value.
GridResult grid_max(const GridSpec& spec, FeasMode mode, int threads = 0, bool symmetry = false);

// Termwise partial-derivative bound cap^3 + 2*cap^3/27.
Rational gradient_bound(const GridSpec& spec);

struct X0ClaimReport {
    int steps = 0;
    Rational grid_max_value;
    Rational lipschitz;
    Rational correction;   // 5 * (t/2) * L
    Rational total;        // grid max + correction
    Rational threshold;    // 1/624
    Rational printed;      // 0.00158, the printed conclusion at s = 100
    bool pass_threshold = false;
    bool pass_printed = false;
};

// Compares grid max + covering correction against the per-vertex C5 floor.
X0ClaimReport certify_x0_claim(const GridSpec& spec, const Rational& lipschitz,
                               const GridResult& strict_result);

}  // namespace pentagon
