#include "pentagon/claims.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentagon {

std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::Le: return "<=";
        case Relation::Lt: return "<";
        case Relation::Ge: return ">=";
        case Relation::Gt: return ">";
        case Relation::Eq: return "=";
    }
    throw std::logic_error("unknown relation");
}

bool relation_holds(const Rational& recomputed, Relation r, const Rational& paper) {
    switch (r) {
        case Relation::Le: return recomputed <= paper;
        case Relation::Lt: return recomputed < paper;
        case Relation::Ge: return recomputed >= paper;
        case Relation::Gt: return recomputed > paper;
        case Relation::Eq: return recomputed == paper;
    }
    throw std::logic_error("unknown relation");
}

namespace {

ClaimRecord make_record(std::string id, std::string description, Rational paper, Rational recomputed,
                        Relation rel, std::map<std::string, Rational> inputs = {}, std::string note = "") {
    ClaimRecord rec{std::move(id),    std::move(description), std::move(paper), std::move(recomputed),
                    rel,              false,                  std::move(inputs), std::move(note)};
    rec.pass = relation_holds(rec.recomputed_value, rec.relation, rec.printed_value);
    return rec;
}

}  // namespace

std::vector<ClaimRecord> verify_claims(const FlagConstants& fc, RhsMode mode, const GridEvidence& grid) {
    std::vector<ClaimRecord> out;
    const Rational derived = derive_main_threshold(fc);
    const Rational printed = rat(3979, 1000000);
    const Rational rhs = mode == RhsMode::Derived ? derived : printed;

    // printed display constants, stored digit-exact
    const Rational x_min = rat(19816, 100000);
    const Rational x_max = rat(20184, 100000);
    const Rational x0_cap = rat(26, 10000);
    const Rational f_cap = rat(11, 1000000);
    const Rational df_cap = rat(132, 10000);

    // 1. the derived threshold exceeds the printed 0.003979
    out.push_back(make_record("main-threshold", "(diff_lower/21)/c5_upper exceeds the printed threshold",
                              printed, derived, Relation::Gt,
                              {{"diff_lower", fc.diff_lower}, {"c5_upper", fc.c5_upper}}));

    // 2. x1 enclosure inside (0.19816, 0.20184); margin formulation of the two-sided claim
    ReducedSolution min_x1 = solve_reduced({Objective::MinX1, rhs});
    ReducedSolution max_x1 = solve_reduced({Objective::MaxX1, rhs});
    {
        Rational margin = std::min(min_x1.interval.lo - x_min, x_max - max_x1.interval.hi);
        out.push_back(make_record(
            "xbound", "x1 range lies strictly inside (0.19816, 0.20184); value is the smaller margin", rat(0),
            margin, Relation::Gt,
            {{"x1_lo", min_x1.interval.lo}, {"x1_hi", max_x1.interval.hi}, {"rhs", rhs}}));
    }

    // 3. max x0 below 0.0026 (holds under the derived rhs only)
    ReducedSolution x0 = solve_reduced({Objective::MaxX0, rhs});
    out.push_back(make_record("x0max", "maximum of x0 stays below 0.0026", x0_cap, x0.interval.hi,
                              Relation::Lt, {{"rhs", rhs}},
                              mode == RhsMode::Printed
                                  ? "the printed rhs 0.003979 is too weak here; the derived rhs is needed"
                                  : ""));

    // 4. max f below 0.000011
    ReducedSolution f = solve_reduced({Objective::MaxF, rhs});
    out.push_back(
        make_record("fmax", "maximum of f stays below 0.000011", f_cap, f.interval.hi, Relation::Lt, {{"rhs", rhs}}));

    // 5. funky-degree bound 1 - 4.98 * 0.19816 <= 0.0132
    Rational df_bound = max_funky_degree_bound(fc, x_min);
    out.push_back(make_record("maxfunky", "funky degree bound 1 - 4.98*x1 at x1 = 0.19816", df_cap, df_bound,
                              Relation::Le, {{"x1min", x_min}}));

    // 6. funky-pair removal, before side: x0/2 + f + 2 df^2 + 9 df xmax^2 <= 0.0065
    {
        Rational lhs = x0_cap / 2 + f_cap + 2 * df_cap * df_cap + 9 * df_cap * x_max * x_max;
        out.push_back(make_record("nofunky.G-side", "C5 count through a funky pair in G, upper bound",
                                  rat(65, 10000), lhs, Relation::Le,
                                  {{"x0", x0_cap}, {"f", f_cap}, {"df", df_cap}, {"xmax", x_max}}));
    }

    // 7. funky-pair removal, after side: (xmin - 2 df) xmin^2 - f xmax >= 0.0067
    {
        Rational lhs = (x_min - 2 * df_cap) * x_min * x_min - f_cap * x_max;
        out.push_back(make_record("nofunky.Gprime-side", "C5 count through the repaired pair in G', lower bound",
                                  rat(67, 10000), lhs, Relation::Ge,
                                  {{"xmin", x_min}, {"f", f_cap}, {"df", df_cap}, {"xmax", x_max}}));
    }

    // 8. moving an X_0 vertex into a class forces funky degree >= 0.081
    {
        Rational lhs = (x_min * x_min * x_min - x0_cap / 2) / (x_max * x_max + x_min * x_min);
        out.push_back(make_record("x0funky", "(xmin^3 - x0/2)/(xmax^2 + xmin^2) meets the 0.081 floor",
                                  rat(81, 1000), lhs, Relation::Ge, {{"xmin", x_min}, {"xmax", x_max}, {"x0", x0_cap}}));
    }

    // 9. per-vertex floor constant: (1/26)/4! = 1/624, printed as 0.001602564. The
    // printed value is a 9-digit rounding, so the check is |exact - printed| <= 5e-10.
    {
        Rational exact = rat(1, 26) / 24;
        Rational gap = abs(exact - rat(1602564, BigInt("1000000000")));
        out.push_back(make_record("uniform-vertex", "(1/26)/4! = 1/624 matches the printed 0.001602564",
                                  rat(BigInt(5), BigInt("10000000000")), gap, Relation::Le,
                                  {{"exact", exact}},
                                  "1/624 = " + to_decimal_string(exact, 12)));
    }

    // 10. grid conclusion: max + 5(t/2)L below the printed 0.00158
    {
        GridSpec spec{grid.s100.steps, rat(21, 100)};
        X0ClaimReport printed_l = certify_x0_claim(spec, rat(1, 1000), grid.s100);
        X0ClaimReport derived_l = certify_x0_claim(spec, gradient_bound(spec), grid.s100);
        std::string note = "with the recomputed gradient bound 0.009947 the s=" +
                           std::to_string(grid.s100.steps) + " total is " +
                           to_decimal_string(derived_l.total, 8) +
                           (derived_l.pass_threshold ? " (clears 1/624)" : " (exceeds 1/624)");
        std::map<std::string, Rational> inputs = {{"grid_max_s100", grid.s100.max_value},
                                                  {"correction_printedL", printed_l.correction},
                                                  {"total_derivedL_s100", derived_l.total},
                                                  {"threshold", rat(1, 624)}};
        if (grid.s200) {
            GridSpec spec200{grid.s200->steps, rat(21, 100)};
            X0ClaimReport rep200 = certify_x0_claim(spec200, gradient_bound(spec200), *grid.s200);
            inputs.emplace("grid_max_s200", grid.s200->max_value);
            inputs.emplace("total_derivedL_s200", rep200.total);
            note += "; s=200 with the recomputed bound totals " + to_decimal_string(rep200.total, 8) +
                    (rep200.pass_threshold ? " (clears 1/624)" : " (exceeds 1/624)");
        }
        out.push_back(make_record("grid-conclusion",
                                  "grid max plus covering correction stays below the printed 0.00158",
                                  rat(158, 100000), printed_l.total, Relation::Lt, std::move(inputs), note));
    }

    // 11. balancing-step leading coefficient: (2/(26*5!))*(4/125) - 1/125 < 0
    {
        Rational lhs = rat(2) / (26 * 120) * rat(4, 125) - rat(1, 125);
        out.push_back(make_record("balance-final", "leading coefficient of the balancing chain is negative",
                                  rat(0), lhs, Relation::Lt));
    }

    return out;
}

bool all_passed(const std::vector<ClaimRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

}  // namespace pentagon
