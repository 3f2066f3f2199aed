#pragma once

#include <json.hpp>

#include "pentagon/blowup.hpp"
#include "pentagon/claims.hpp"
#include "pentagon/counting.hpp"
#include "pentagon/grid.hpp"
#include "pentagon/limit_density.hpp"
#include "pentagon/qp.hpp"
#include "pentagon/search.hpp"

namespace pentagon {

using Json = nlohmann::ordered_json;

// {"fraction": "p/q", "decimal": <12 digits>}
Json rational_json(const Rational& q);

Json to_json(const GridResult& r);
Json to_json(const X0ClaimReport& r);
Json to_json(const ClaimRecord& r);
Json to_json(const std::vector<ClaimRecord>& records);
Json to_json(const SearchResult& r);
Json to_json(const ReducedSolution& r, const std::string& objective);
Json to_json(const PartitionAnalysis& a);
Json to_json(const LimitDensityResult& r);

std::string claims_table(const std::vector<ClaimRecord>& records);

}  // namespace pentagon
