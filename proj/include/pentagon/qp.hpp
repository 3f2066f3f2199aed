#pragma once

#include <map>
#include <string>

#include "pentagon/rational.hpp"

namespace pentagon {

// Input constants from the flag-algebra computation, stored exactly.
struct FlagConstants {
    Rational c5_upper;    // upper bound on the limiting C5 density
    Rational diff_lower;  // lower bound on 4*C22111 - 11.94*C31111
    Rational a;           // pentagon scoring weight

    static FlagConstants published();
};

// (diff_lower / 21) / c5_upper; must exceed 0.003979.
Rational derive_main_threshold(const FlagConstants& fc);

enum class Objective { MinX1, MaxX1, MaxX0, MaxF };

// Symmetrized program over x0 + x1 + 4y = 1 with the quadratic constraint
// 8*x1*y - 3.92*y^2 - 3.98*x1^2 - 2f >= rhs (f = 0 unless maximizing f).
struct ReducedProgram {
    Objective objective;
    Rational rhs;
};

struct CertifiedInterval {
    Rational lo, hi;  // the optimum lies in [lo, hi]
};

struct ReducedSolution {
    bool feasible = false;
    CertifiedInterval interval;
    std::map<std::string, Rational> witness;  // exact feasible point near the optimum
};

// KKT case enumeration with rational bisection enclosures (width <= 1e-12).
ReducedSolution solve_reduced(const ReducedProgram& p);

// A feasible sample (x0..x5, f) for the main constraint with the given rhs.
struct SymmetrySample {
    Rational x[6];
    Rational f;
};

// Checks exactly that the symmetrized point (same x0, x1; x2..x5 equalized;
// f = 0) is still feasible. Throws if the sample itself is infeasible.
bool symmetrization_check(const SymmetrySample& sample, const Rational& rhs);

// Constraint value 2*sum_{i<j} x_i x_j - 2f - 3.98*sum x_i^2 over classes 1..5.
Rational main_constraint_lhs(const SymmetrySample& sample);

// 1 - 4.98*x1min, the funky-degree bound.
Rational max_funky_degree_bound(const FlagConstants& fc, const Rational& x1min);

}  // namespace pentagon
