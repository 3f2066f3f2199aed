#pragma once

#include <vector>

#include "pentagon/counting.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/rational.hpp"

namespace pentagon {

// All isomorphism classes obtained by blowing base vertices up to the given
// multiplicities (every placement of the multiset over base vertices), with
// cross-class edges following the base and within-class edges arbitrary.
PatternFamily pattern_family(const SmallGraph& base, const std::vector<int>& multiplicities,
                             std::string label = "");

// The three named 7-vertex families over C5 plus the trivial one.
const PatternFamily& c5_family();
const PatternFamily& c22111_family();
const PatternFamily& c31111_family();

struct LimitDensityResult {
    PatternFamily family;
    Rational density;                 // sum over members
    std::vector<Rational> per_member;
};

// Exact density of each family member in the infinitely iterated balanced
// blow-up of base. Solves, per pattern P on k vertices,
//   d(P) * (1 - b^(1-k)) = b^(-k) * sum over non-constant class maps phi
//                          consistent with the base of prod_c d(P[phi^-1(c)]),
// then converts labeled to unlabeled by k!/|Aut(P)|.
LimitDensityResult limit_density(const SmallGraph& base, const PatternFamily& target);

// Exact density of the family in C5^{k x} (5^k vertices), via the same
// decomposition with exact embedding counts truncated at depth k.
Rational finite_density(int k, const PatternFamily& target);

}  // namespace pentagon
