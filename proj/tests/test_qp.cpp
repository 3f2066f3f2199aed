#include <doctest.h>

#include "pentagon/qp.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::SplitMix64;

namespace {

Rational random_rational(SplitMix64& rng, long den = 10000) {
    return rat(static_cast<long>(rng.below(2 * den + 1)) - den, den);
}

}  // namespace

TEST_CASE("flag constants satisfy their invariants") {
    FlagConstants fc = FlagConstants::published();
    CHECK(fc.diff_lower > rat(3214, 1000000));
    CHECK(fc.c5_upper > rat(1, 26));
    CHECK(fc.a == rat(398, 100));
}

TEST_CASE("derived main threshold") {
    FlagConstants fc = FlagConstants::published();
    Rational thr = derive_main_threshold(fc);
    CHECK(thr == rat(BigInt("1349894760355389179787709186391"),
                     BigInt("339231047400000000000000000000000")));
    CHECK(thr > rat(3979, 1000000));
    CHECK(to_decimal_string(thr, 10) == "0.0039792783");  // frozen regression value

    FlagConstants zeroed = fc;
    zeroed.diff_lower = rat(0);
    CHECK(derive_main_threshold(zeroed) == rat(0));
}

TEST_CASE("x1 cap-case quadratic equals its centered form") {
    // -6.225 x^2 + 2.49 x - 0.245 == 0.004 - 6.225 (x - 0.2)^2, checked at random points
    SplitMix64 rng(71);
    for (int i = 0; i < 20; ++i) {
        Rational x = random_rational(rng);
        Rational lhs = rat(-249, 40) * x * x + rat(249, 100) * x - rat(49, 200);
        Rational rhs = rat(1, 250) - rat(249, 40) * (x - rat(1, 5)) * (x - rat(1, 5));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("x1 bounds under both rhs values") {
    FlagConstants fc = FlagConstants::published();
    for (const Rational& rhs : {rat(3979, 1000000), derive_main_threshold(fc)}) {
        ReducedSolution lo = solve_reduced({Objective::MinX1, rhs});
        ReducedSolution hi = solve_reduced({Objective::MaxX1, rhs});
        REQUIRE(lo.feasible);
        REQUIRE(hi.feasible);
        CHECK(lo.interval.hi - lo.interval.lo <= rat(1, BigInt("1000000000000")));
        CHECK(hi.interval.hi - hi.interval.lo <= rat(1, BigInt("1000000000000")));
        CHECK(lo.interval.lo > rat(19816, 100000));
        CHECK(hi.interval.hi < rat(20184, 100000));
        // enclosures bracket the closed-form roots of 0.004 - 6.225 (x-0.2)^2 = rhs
        auto centered = [&](const Rational& x) -> Rational {
            return rat(1, 250) - rat(249, 40) * (x - rat(1, 5)) * (x - rat(1, 5)) - rhs;
        };
        CHECK(sgn(centered(lo.interval.lo)) * sgn(centered(lo.interval.hi)) <= 0);
        CHECK(sgn(centered(hi.interval.lo)) * sgn(centered(hi.interval.hi)) <= 0);
        // endpoints near 0.2 -+ sqrt((0.004-rhs)/6.225): enclosure width makes this easy
        CHECK(abs(lo.interval.lo - rat(1, 5)) < rat(2, 1000));
        CHECK(abs(hi.interval.hi - rat(1, 5)) < rat(2, 1000));
        // witnesses are exactly feasible and within 1e-9 of the respective endpoint
        auto check_witness = [&](const ReducedSolution& sol, bool maximize) {
            Rational x1 = sol.witness.at("x1"), y = sol.witness.at("y"), x0 = sol.witness.at("x0");
            CHECK(x0 + x1 + 4 * y == rat(1));
            CHECK(sgn(x0) >= 0);
            Rational g = rat(8) * x1 * y - rat(98, 25) * y * y - rat(199, 50) * x1 * x1;
            CHECK(g >= rhs);
            // and against the original six-variable constraint, exactly
            SymmetrySample original{{x0, x1, y, y, y, y}, sol.witness.at("f")};
            CHECK(main_constraint_lhs(original) >= rhs);
            Rational target = maximize ? sol.interval.hi : sol.interval.lo;
            CHECK(abs(x1 - target) <= rat(1, BigInt("1000000000")));
        };
        check_witness(lo, false);
        check_witness(hi, true);
    }
}

TEST_CASE("max f and max x0") {
    FlagConstants fc = FlagConstants::published();
    Rational printed = rat(3979, 1000000);
    Rational derived = derive_main_threshold(fc);

    ReducedSolution f_printed = solve_reduced({Objective::MaxF, printed});
    REQUIRE(f_printed.feasible);
    CHECK(f_printed.interval.lo == f_printed.interval.hi);
    CHECK(f_printed.interval.hi == rat(21, 2000000));  // (0.004 - 0.003979)/2
    CHECK(f_printed.interval.hi < rat(11, 1000000));

    ReducedSolution f_derived = solve_reduced({Objective::MaxF, derived});
    CHECK(f_derived.interval.hi < rat(11, 1000000));
    CHECK(f_derived.interval.hi == (rat(1, 250) - derived) / 2);

    // the known tension: printed rhs gives ~0.00263 > 0.0026, derived ~0.00259 < 0.0026
    ReducedSolution x0_printed = solve_reduced({Objective::MaxX0, printed});
    REQUIRE(x0_printed.feasible);
    CHECK(x0_printed.interval.hi > rat(26, 10000));
    CHECK(x0_printed.interval.hi < rat(27, 10000));

    ReducedSolution x0_derived = solve_reduced({Objective::MaxX0, derived});
    REQUIRE(x0_derived.feasible);
    CHECK(x0_derived.interval.hi < rat(26, 10000));
    CHECK(x0_derived.interval.hi > rat(25, 10000));

    // witnesses satisfy the symmetrized constraint exactly
    Rational wy = x0_derived.witness.at("y");
    CHECK(rat(1, 10) * wy * wy >= derived);
    CHECK(x0_derived.witness.at("x0") + 5 * wy == rat(1));
}

TEST_CASE("infeasible programs are reported") {
    CHECK_FALSE(solve_reduced({Objective::MinX1, rat(5, 1000)}).feasible);
    CHECK_FALSE(solve_reduced({Objective::MaxX0, rat(5, 1000)}).feasible);
    CHECK_FALSE(solve_reduced({Objective::MaxF, rat(5, 1000)}).feasible);
    CHECK_THROWS_AS(solve_reduced({Objective::MaxF, rat(0)}), std::invalid_argument);
}

TEST_CASE("monotonicity in rhs") {
    Rational r1 = rat(3900, 1000000), r2 = rat(3950, 1000000), r3 = rat(3990, 1000000);
    Rational width_prev(-1), x0_prev(2), f_prev(2);
    for (const Rational& rhs : {r1, r2, r3}) {
        ReducedSolution lo = solve_reduced({Objective::MinX1, rhs});
        ReducedSolution hi = solve_reduced({Objective::MaxX1, rhs});
        Rational width = hi.interval.hi - lo.interval.lo;
        if (width_prev >= rat(0)) CHECK(width < width_prev);
        width_prev = width;
        Rational x0 = solve_reduced({Objective::MaxX0, rhs}).interval.hi;
        CHECK(x0 < x0_prev);
        x0_prev = x0;
        Rational f = solve_reduced({Objective::MaxF, rhs}).interval.hi;
        CHECK(f < f_prev);
        f_prev = f;
    }
}

TEST_CASE("symmetrization lemma holds on random feasible samples") {
    Rational rhs = rat(3979, 1000000);
    SplitMix64 rng(73);
    int accepted = 0;
    while (accepted < 1000) {
        SymmetrySample s;
        // x_i near 1/5 with small jitter, x0 small, then normalize to sum 1
        Rational sum(0);
        for (int i = 1; i <= 5; ++i) {
            s.x[i] = rat(1, 5) + rat(static_cast<long>(rng.below(41)) - 20, 10000);
            sum += s.x[i];
        }
        s.x[0] = rat(static_cast<long>(rng.below(10)), 10000);
        sum += s.x[0];
        for (int i = 0; i <= 5; ++i) s.x[i] /= sum;
        s.f = rat(static_cast<long>(rng.below(5)), 1000000);
        if (main_constraint_lhs(s) <= rhs) continue;
        ++accepted;
        CHECK(symmetrization_check(s, rhs));
    }

    SymmetrySample already{{rat(0), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)}, rat(0)};
    CHECK(symmetrization_check(already, rhs));

    SymmetrySample infeasible{{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)}, rat(0)};
    CHECK_THROWS_AS(symmetrization_check(infeasible, rhs), std::invalid_argument);
}

TEST_CASE("funky degree bound") {
    FlagConstants fc = FlagConstants::published();
    CHECK(max_funky_degree_bound(fc, rat(19816, 100000)) == rat(131632, 10000000));
    CHECK(max_funky_degree_bound(fc, rat(19816, 100000)) <= rat(132, 10000));
    CHECK(max_funky_degree_bound(fc, rat(1, 5)) == rat(4, 1000));
    CHECK(max_funky_degree_bound(fc, rat(0)) == rat(1));
    CHECK_THROWS_AS(max_funky_degree_bound(fc, rat(1, 4)), std::invalid_argument);
}
