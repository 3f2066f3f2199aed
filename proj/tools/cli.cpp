#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pentagon/json_io.hpp"

using namespace pentagon;

namespace {

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kVerificationFail = 1, kUsage = 2 };

std::string read_graph_text(const std::string& positional, const std::string& file) {
    if (!positional.empty()) return positional;
    std::string text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in.good()) throw std::invalid_argument("cannot open " + file);
        std::getline(in, text);
    } else {
        std::getline(std::cin, text);
    }
    return text;
}

SmallGraph load_graph(const std::string& positional, const std::string& file) {
    std::string text = read_graph_text(positional, file);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return from_graph6(text);
}

const PatternFamily& family_by_name(const std::string& name) {
    if (name == "c5") return c5_family();
    if (name == "c22111") return c22111_family();
    if (name == "c31111") return c31111_family();
    throw std::invalid_argument("unknown pattern " + name);
}

BlowupTree tree_from_json(const Json& j) {
    if (j.contains("leaf")) return BlowupTree::leaf(from_graph6(j["leaf"].get<std::string>()));
    SmallGraph base = from_graph6(j.at("base").get<std::string>());
    std::vector<BlowupTree> children;
    for (const auto& c : j.at("children")) children.push_back(tree_from_json(c));
    return BlowupTree::node(std::move(base), std::move(children));
}

BlowupTree parse_tree_spec(const std::string& spec) {
    if (spec == "c5") return BlowupTree::leaf(SmallGraph::cycle(5));
    if (spec.rfind("c5x", 0) == 0) return BlowupTree::iterated_c5(std::stoi(spec.substr(3)));
    if (spec.rfind("blowup(", 0) == 0 && spec.back() == ')') {
        std::string body = spec.substr(7, spec.size() - 8);
        auto semi = body.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("blowup(<graph6>;s1,...,sk)");
        SmallGraph base = from_graph6(body.substr(0, semi));
        std::vector<BlowupTree> children;
        std::string sizes = body.substr(semi + 1);
        std::size_t at = 0;
        while (at < sizes.size()) {
            auto comma = sizes.find(',', at);
            if (comma == std::string::npos) comma = sizes.size();
            children.push_back(BlowupTree::leaf(SmallGraph::empty(std::stoi(sizes.substr(at, comma - at)))));
            at = comma + 1;
        }
        return BlowupTree::node(std::move(base), std::move(children));
    }
    throw std::invalid_argument("tree spec must be c5, c5x<k>, or blowup(<graph6>;sizes)");
}

GridEvidence compute_grid_evidence(int steps, bool with_s200, int threads) {
    GridEvidence ev{grid_max(GridSpec{steps, rat(21, 100)}, FeasMode::Strict, threads), std::nullopt};
    if (with_s200) ev.s200 = grid_max(GridSpec{200, rat(21, 100)}, FeasMode::Strict, threads);
    return ev;
}

Json qp_bounds_json(RhsMode mode) {
    FlagConstants fc = FlagConstants::published();
    Rational rhs = mode == RhsMode::Derived ? derive_main_threshold(fc) : rat(3979, 1000000);
    Json j;
    j["rhs_mode"] = mode == RhsMode::Derived ? "derived" : "printed";
    j["rhs"] = rational_json(rhs);
    j["main_threshold"] = rational_json(derive_main_threshold(fc));
    j["min_x1"] = to_json(solve_reduced({Objective::MinX1, rhs}), "min_x1");
    j["max_x1"] = to_json(solve_reduced({Objective::MaxX1, rhs}), "max_x1");
    j["max_x0"] = to_json(solve_reduced({Objective::MaxX0, rhs}), "max_x0");
    j["max_f"] = to_json(solve_reduced({Objective::MaxF, rhs}), "max_f");
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for induced-C5 inducibility via iterated pentagon blow-ups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int threads = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "emit a blow-up construction as graph6");
    std::string tree_spec, tree_json_file;
    construct->add_option("--tree", tree_spec, "c5 | c5x<k> | blowup(<graph6>;s1,...,s5)");
    construct->add_option("--tree-json", tree_json_file, "nested {leaf|base,children} JSON file");

    // recursion-value
    auto* recval = app.add_subcommand("recursion-value", "R(n) of the balanced construction");
    long recval_n = 0;
    recval->add_option("n", recval_n, "vertex count")->required();

    // count
    auto* count = app.add_subcommand("count", "count induced copies of a pattern family");
    std::string count_pattern = "c5", count_g6, count_file;
    count->add_option("--pattern", count_pattern, "c5 | c22111 | c31111");
    count->add_option("graph6", count_g6, "host graph (default: stdin)");
    count->add_option("--file", count_file, "read the host graph from a file");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "pentagon partition analysis of a host graph");
    std::string analyze_pentagon, analyze_g6, analyze_file;
    analyze->add_option("--pentagon", analyze_pentagon, "z1,z2,z3,z4,z5 in cyclic order")->required();
    analyze->add_option("graph6", analyze_g6, "host graph (default: stdin)");
    analyze->add_option("--file", analyze_file, "read the host graph from a file");

    // limit-density
    auto* limdens = app.add_subcommand("limit-density", "exact limit density in the iterated blow-up");
    std::string ld_base = "c5", ld_pattern = "c5", ld_base_g6;
    limdens->add_option("--base", ld_base, "base graph name (c5)");
    limdens->add_option("--base-graph6", ld_base_g6, "explicit base graph");
    limdens->add_option("--pattern", ld_pattern, "c5 | c22111 | c31111");

    // qp-bounds
    auto* qp = app.add_subcommand("qp-bounds", "exact bounds of the reduced quadratic programs");
    std::string qp_rhs = "derived";
    qp->add_option("--rhs", qp_rhs, "printed | derived")->check(CLI::IsMember({"printed", "derived"}));

    // grid-certify
    auto* grid = app.add_subcommand("grid-certify", "exact grid maximization with Lipschitz certification");
    int grid_steps = 100;
    std::string grid_mode = "strict", grid_lipschitz = "printed", grid_symmetry = "off";
    bool grid_json = false;
    grid->add_option("--steps", grid_steps, "grid steps per axis");
    grid->add_option("--mode", grid_mode, "strict | relaxed | unconstrained")
        ->check(CLI::IsMember({"strict", "relaxed", "unconstrained"}));
    grid->add_option("--lipschitz", grid_lipschitz, "printed (0.001) | derived (0.009947)")
        ->check(CLI::IsMember({"printed", "paper", "derived"}));
    grid->add_option("--symmetry", grid_symmetry, "on | off")->check(CLI::IsMember({"on", "off"}));
    grid->add_flag("--json", grid_json, "emit JSON (default)");
    grid->add_option("--threads", threads, "worker threads (default: hardware)");

    // search
    auto* search = app.add_subcommand("search", "extremal search");
    int search_exact = 0, search_climb = 0;
    std::uint64_t search_seed = 0, search_iters = 100;
    bool seed_given = false;
    search->add_option("--exact", search_exact, "exhaustive search at n (5..10)");
    search->add_option("--climb", search_climb, "hill climb at n (<= 64)");
    search->add_option("--seed", search_seed, "PRNG seed (required for --climb)")
        ->each([&](const std::string&) { seed_given = true; });
    search->add_option("--iters", search_iters, "hill-climb steps");
    search->add_option("--threads", threads, "worker threads for --exact");

    // verify-claims
    auto* verify = app.add_subcommand("verify-claims", "recompute the published numeric inequality chain");
    std::string verify_rhs = "derived", verify_format = "json";
    int verify_grid_steps = 100;
    bool with_s200 = false;
    verify->add_option("--rhs", verify_rhs, "printed | derived")->check(CLI::IsMember({"printed", "derived"}));
    verify->add_flag_callback("--json", [&] { verify_format = "json"; }, "JSON output (default)");
    verify->add_flag_callback("--table", [&] { verify_format = "table"; }, "human-readable table");
    verify->add_option("--grid-steps", verify_grid_steps, "grid resolution feeding the grid record");
    verify->add_flag("--with-s200", with_s200, "also run the extended s=200 grid");
    verify->add_option("--threads", threads, "worker threads for the grid");

    // report
    auto* report = app.add_subcommand("report", "combined verification report");
    std::string report_rhs = "derived";
    int report_grid_steps = 100;
    bool no_timestamp = false, report_s200 = false;
    report->add_option("--rhs", report_rhs, "printed | derived")->check(CLI::IsMember({"printed", "derived"}));
    report->add_option("--grid-steps", report_grid_steps, "grid resolution");
    report->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp field");
    report->add_flag("--with-s200", report_s200, "also run the extended s=200 grid");
    report->add_option("--threads", threads, "worker threads for the grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return kUsage;
    }

    try {
        if (construct->parsed()) {
            BlowupTree tree = !tree_json_file.empty()
                                  ? [&] {
                                        std::ifstream in(tree_json_file);
                                        if (!in.good()) throw std::invalid_argument("cannot open " + tree_json_file);
                                        Json j = Json::parse(in);
                                        return tree_from_json(j);
                                    }()
                                  : parse_tree_spec(tree_spec);
            std::cout << to_graph6(realize(tree)) << "\n";
            return kOk;
        }
        if (recval->parsed()) {
            std::cout << recursion_value(recval_n).get_str() << "\n";
            return kOk;
        }
        if (count->parsed()) {
            SmallGraph g = load_graph(count_g6, count_file);
            std::cout << count_family(g, family_by_name(count_pattern)) << "\n";
            return kOk;
        }
        if (analyze->parsed()) {
            SmallGraph g = load_graph(analyze_g6, analyze_file);
            Pentagon p{};
            std::size_t at = 0;
            for (int i = 0; i < 5; ++i) {
                auto comma = analyze_pentagon.find(',', at);
                std::string tok = analyze_pentagon.substr(at, comma == std::string::npos ? comma : comma - at);
                p.z[i] = std::stoi(tok);
                at = comma == std::string::npos ? analyze_pentagon.size() : comma + 1;
            }
            std::cout << to_json(funky_analysis(g, p)).dump(2) << "\n";
            return kOk;
        }
        if (limdens->parsed()) {
            SmallGraph base = !ld_base_g6.empty() ? from_graph6(ld_base_g6)
                              : ld_base == "c5"   ? SmallGraph::cycle(5)
                                                  : throw std::invalid_argument("unknown base " + ld_base);
            LimitDensityResult res = limit_density(base, family_by_name(ld_pattern));
            std::cout << to_json(res).dump(2) << "\n";
            return kOk;
        }
        if (qp->parsed()) {
            std::cout << qp_bounds_json(qp_rhs == "derived" ? RhsMode::Derived : RhsMode::Printed).dump(2)
                      << "\n";
            return kOk;
        }
        if (grid->parsed()) {
            GridSpec spec{grid_steps, rat(21, 100)};
            FeasMode mode = grid_mode == "strict"    ? FeasMode::Strict
                            : grid_mode == "relaxed" ? FeasMode::Relaxed
                                                     : FeasMode::Unconstrained;
            GridResult res = grid_max(spec, mode, threads, grid_symmetry == "on");
            Json out{{"grid", to_json(res)}};
            if (mode == FeasMode::Strict) {
                Rational lipschitz = grid_lipschitz != "derived" ? rat(1, 1000) : gradient_bound(spec);
                out["certification"] = to_json(certify_x0_claim(spec, lipschitz, res));
            }
            std::cout << out.dump(2) << "\n";
            return kOk;
        }
        if (search->parsed()) {
            if ((search_exact == 0) == (search_climb == 0))
                throw std::invalid_argument("choose exactly one of --exact or --climb");
            SearchResult res;
            if (search_exact != 0) {
                res = exhaustive_c(search_exact, threads);
            } else {
                if (!seed_given) throw std::invalid_argument("--climb requires an explicit --seed");
                res = hill_climb(search_climb, search_seed, search_iters);
            }
            std::cout << to_json(res).dump(2) << "\n";
            return kOk;
        }
        if (verify->parsed()) {
            GridEvidence evidence = compute_grid_evidence(verify_grid_steps, with_s200, threads);
            auto records = verify_claims(FlagConstants::published(),
                                         verify_rhs == "derived" ? RhsMode::Derived : RhsMode::Printed,
                                         evidence);
            if (verify_format == "table")
                std::cout << claims_table(records);
            else
                std::cout << to_json(records).dump(2) << "\n";
            return all_passed(records) ? kOk : kVerificationFail;
        }
        if (report->parsed()) {
            RhsMode mode = report_rhs == "derived" ? RhsMode::Derived : RhsMode::Printed;
            GridEvidence evidence = compute_grid_evidence(report_grid_steps, report_s200, threads);
            auto records = verify_claims(FlagConstants::published(), mode, evidence);
            SmallGraph c5 = SmallGraph::cycle(5);
            Json j;
            j["tool_version"] = kVersion;
            j["inputs"] = Json{{"rhs_mode", report_rhs}, {"grid_steps", report_grid_steps}};
            if (!no_timestamp) {
                j["timestamp"] = static_cast<std::int64_t>(
                    std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count());
            }
            j["limit_densities"] = Json{{"c5", to_json(limit_density(c5, c5_family()))},
                                        {"c22111", to_json(limit_density(c5, c22111_family()))},
                                        {"c31111", to_json(limit_density(c5, c31111_family()))}};
            j["qp_bounds"] = qp_bounds_json(mode);
            j["claims"] = to_json(records);
            j["grid"] = to_json(evidence.s100);
            j["overall_pass"] = all_passed(records);
            std::cout << j.dump(2) << "\n";
            return all_passed(records) ? kOk : kVerificationFail;
        }
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
