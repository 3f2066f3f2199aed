#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/grid.hpp"
#include "pentagon/qp.hpp"
#include "pentagon/rational.hpp"

namespace pentagon {

enum class RhsMode { Printed, Derived };  // 0.003979 literally vs the exact derivation

enum class Relation { Le, Lt, Ge, Gt, Eq };

std::string relation_symbol(Relation r);
bool relation_holds(const Rational& recomputed, Relation r, const Rational& paper);

struct ClaimRecord {
    std::string id;
    std::string description;
    Rational printed_value;
    Rational recomputed_value;
    Relation relation = Relation::Le;
    bool pass = false;
    std::map<std::string, Rational> inputs;
    std::string note;
};

// Precomputed strict-feasible grid maxima fed into the grid-conclusion record.
struct GridEvidence {
    GridResult s100;
    std::optional<GridResult> s200;
};

// Recomputes the numeric inequality chain: exactly 11 records per mode, each
// evaluated by calling the owning module. Failures are recorded, never thrown.
std::vector<ClaimRecord> verify_claims(const FlagConstants& fc, RhsMode mode, const GridEvidence& grid);

bool all_passed(const std::vector<ClaimRecord>& records);

}  // namespace pentagon
