#include "pentagon/json_io.hpp"

#include <sstream>

namespace pentagon {

Json rational_json(const Rational& q) {
    return Json{{"fraction", to_fraction_string(q)}, {"decimal", to_decimal_string(q, 12)}};
}

Json to_json(const GridResult& r) {
    const char* mode = r.mode == FeasMode::Strict ? "strict" : r.mode == FeasMode::Relaxed ? "relaxed" : "unconstrained";
    return Json{{"steps", r.steps},
                {"mode", mode},
                {"symmetry", r.symmetry_reduced},
                {"max_value", rational_json(r.max_value)},
                {"argmax", r.argmax.u},
                {"evaluated", r.evaluated}};
}

Json to_json(const X0ClaimReport& r) {
    return Json{{"steps", r.steps},
                {"grid_max", rational_json(r.grid_max_value)},
                {"lipschitz", rational_json(r.lipschitz)},
                {"correction", rational_json(r.correction)},
                {"total", rational_json(r.total)},
                {"threshold", rational_json(r.threshold)},
                {"printed", rational_json(r.printed)},
                {"pass_threshold", r.pass_threshold},
                {"pass_printed", r.pass_printed}};
}

Json to_json(const ClaimRecord& r) {
    Json inputs = Json::object();
    for (const auto& [name, value] : r.inputs) inputs[name] = rational_json(value);
    Json j{{"id", r.id},
           {"description", r.description},
           {"printed_value", rational_json(r.printed_value)},
           {"recomputed_value", rational_json(r.recomputed_value)},
           {"relation", relation_symbol(r.relation)},
           {"pass", r.pass},
           {"inputs", inputs}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const std::vector<ClaimRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr;
}

Json to_json(const SearchResult& r) {
    Json j{{"n", r.n},
           {"best_count", r.best_count},
           {"witnesses", r.witnesses},
           {"exhaustive", r.exhaustive},
           {"graphs_examined", r.graphs_examined}};
    if (!r.exhaustive) {
        j["seed"] = r.seed;
        j["iterations"] = r.iterations;
    }
    return j;
}

Json to_json(const ReducedSolution& r, const std::string& objective) {
    Json j{{"objective", objective}, {"feasible", r.feasible}};
    if (r.feasible) {
        j["lo"] = rational_json(r.interval.lo);
        j["hi"] = rational_json(r.interval.hi);
        Json witness = Json::object();
        for (const auto& [name, value] : r.witness) witness[name] = rational_json(value);
        j["witness"] = witness;
    }
    return j;
}

Json to_json(const PartitionAnalysis& a) {
    Json classes = Json::array();
    for (const auto& cls : a.classes) classes.push_back(cls);
    Json x = Json::array();
    for (const auto& xi : a.x) x.push_back(rational_json(xi));
    Json df = Json::array();
    for (const auto& d : a.df_per_vertex) df.push_back(rational_json(d));
    Json pairs = Json::array();
    for (const auto& [u, v] : a.funky_pairs) pairs.push_back(Json::array({u, v}));
    return Json{{"pentagon", a.pentagon.z},
                {"classes", classes},
                {"outside", a.outside},
                {"x", x},
                {"f", rational_json(a.f)},
                {"df_per_vertex", df},
                {"funky_pairs", pairs}};
}

Json to_json(const LimitDensityResult& r) {
    Json per_member = Json::array();
    for (std::size_t i = 0; i < r.per_member.size(); ++i)
        per_member.push_back(Json{{"graph6", to_graph6(r.family.members[i])},
                                  {"density", rational_json(r.per_member[i])}});
    return Json{{"family", r.family.label},
                {"members", r.family.members.size()},
                {"density", rational_json(r.density)},
                {"per_member", per_member}};
}

std::string claims_table(const std::vector<ClaimRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.id << ": " << to_decimal_string(r.recomputed_value, 10)
            << " " << relation_symbol(r.relation) << " " << to_decimal_string(r.printed_value, 10);
        if (!r.note.empty()) out << "  [" << r.note << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace pentagon
