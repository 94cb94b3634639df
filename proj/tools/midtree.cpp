#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "midtree/midtree.hpp"

namespace {

using namespace midtree;

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::Parse, "cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Err::Parse, "cannot open '" + path + "' for writing");
    return out;
}

SatCase load_case(const std::string& path) {
    auto in = open_in(path);
    return parse_dimacs(in);
}

template <typename WriteFn>
void emit(const std::string& path, WriteFn&& write) {
    if (path.empty()) {
        write(std::cout);
    } else {
        auto out = open_out(path);
        write(out);
    }
}

std::string render_assignment(const Assignment& h) {
    std::string s;
    for (int v = 1; v <= h.vars(); ++v) {
        if (v > 1) s += " ";
        s += std::to_string(h(v) * v);
    }
    return s;
}

int cmd_encode(const std::string& cnf, const std::string& output) {
    SatCase P = load_case(cnf);
    MidpointsStructure m = encode_case(P);
    emit(output, [&](std::ostream& out) { write_structure(out, m); });
    (output.empty() ? std::cerr : std::cout) << "elements " << m.size() << "\n";
    return 0;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& output) {
    auto in = open_in(input);
    if (to == "triples") {
        TriplesStructure r = to_triples(read_structure(in));
        emit(output, [&](std::ostream& out) { write_triples(out, r); });
    } else if (to == "midpoints") {
        MidpointsStructure m = to_midpoints(read_triples(in));
        emit(output, [&](std::ostream& out) { write_structure(out, m); });
    } else {
        throw Error(Err::Parse, "--to must be 'triples' or 'midpoints'");
    }
    return 0;
}

int cmd_check(const std::string& structure, const std::string& tree, const std::string& report,
              bool collect_all) {
    auto sin = open_in(structure);
    MidpointsStructure m = read_structure(sin);
    auto tin = open_in(tree);
    TreeMetric t = read_tree(tin);
    CheckOptions opts;
    opts.collect_all = collect_all;
    RealizationReport rep = check_realization(m, t, opts);
    if (!report.empty()) {
        auto out = open_out(report);
        write_report(out, m.ground(), rep);
    }
    std::cout << (rep.ok ? "realized" : "violated") << " pairs " << rep.pairs_checked
              << " violations " << rep.violations.size() << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_realize(const std::string& cnf, const std::string& assignment, const std::string& tree_out,
                const std::string& report_out, const std::string& correction) {
    SatCase P = load_case(cnf);
    auto ain = open_in(assignment);
    Assignment h = read_assignment(ain);
    BuildOptions opts;
    if (correction == "solve")
        opts.mode = CorrectionMode::ChainSolve;
    else if (correction != "recursion")
        throw Error(Err::Parse, "--correction must be 'recursion' or 'solve'");
    RealizationBuild build = build_realization(P, h, opts);
    if (!tree_out.empty()) {
        auto out = open_out(tree_out);
        write_tree(out, build.tree);
    }
    if (!report_out.empty()) {
        auto out = open_out(report_out);
        write_report(out, build.structure.ground(), build.report);
    }
    std::cout << (build.report.ok ? "realized" : "violated") << " pairs "
              << build.report.pairs_checked << " violations " << build.report.violations.size()
              << "\n";
    return build.report.ok ? 0 : 1;
}

int cmd_extract(const std::string& cnf, const std::string& tree, const std::string& output) {
    SatCase P = load_case(cnf);
    auto tin = open_in(tree);
    TreeMetric t = read_tree(tin);
    Assignment h = extract_assignment(t, P);
    emit(output, [&](std::ostream& out) { write_assignment(out, h); });
    return 0;
}

int cmd_oracle(const std::string& structure, std::size_t cap, const std::string& witness_out) {
    auto sin = open_in(structure);
    MidpointsStructure m = read_structure(sin);
    OracleResult res = brute_realizable(m, cap);
    if (res.realizable) {
        if (!witness_out.empty()) {
            auto out = open_out(witness_out);
            write_tree(out, *res.witness);
        }
        std::cout << "realizable\n";
        return 0;
    }
    std::cout << "not-realizable\n";
    return 1;
}

int cmd_census(std::size_t n, unsigned jobs, std::uint64_t samples, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    CensusRow row;
    std::string mode;
    if (samples > 0) {
        row = sampled_census(n, samples, seed);
        mode = "sampled";
    } else {
        if (n > 4)
            throw Error(Err::CapExceeded,
                        "exhaustive census supported for n <= 4; pass --samples for larger n");
        row = exhaustive_census(n, jobs);
        mode = "exhaustive";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "n " << row.n << " mode " << mode << " examined " << row.examined
              << " realizable " << row.realizable << "\n";
    std::cerr << "wall-time-seconds " << secs << "\n";
    return 0;
}

int cmd_sat(const std::string& cnf, bool list_all) {
    SatCase P = load_case(cnf);
    auto sols = sat_bruteforce(P);
    std::cout << "satisfying " << sols.size() << "\n";
    if (list_all)
        for (const auto& h : sols) std::cout << render_assignment(h) << "\n";
    return sols.empty() ? 1 : 0;
}

int cmd_demo_warnow(const std::string& cnf) {
    SatCase P = load_case(cnf);
    if (P.C != 1) throw Error(Err::InvalidInput, "the demo needs a single-clause case");
    MidpointsStructure m = encode_case(P);
    std::vector<Split> geometry = midpoints_geometry(m);
    std::cout << "case: V=" << P.V << " C=" << P.C << ", encoded on " << m.size()
              << " elements; midpoints geometry has " << geometry.size() << " edges\n";

    OracleResult restricted = strict_feasible(geometry, m);
    std::cout << "restricted to the midpoints geometry: "
              << (restricted.realizable ? "feasible" : "infeasible") << "\n";
    if (restricted.realizable) return 1;

    auto sols = sat_bruteforce(P);
    if (sols.size() < 2) return 1;
    std::set<Split> geo(geometry.begin(), geometry.end());
    std::vector<std::set<Split>> supports;
    for (std::size_t k = 0; k < 2; ++k) {
        RealizationBuild build = build_realization(P, sols[k]);
        std::cout << "assignment " << render_assignment(sols[k]) << ": "
                  << (build.report.ok ? "verified realization" : "verification FAILED") << " with "
                  << build.tree.support().size() << " support edges\n";
        if (!build.report.ok) return 1;
        std::set<Split> sup;
        for (const auto& [split, len] : build.tree.support()) sup.insert(split);
        bool contains_geo = std::includes(sup.begin(), sup.end(), geo.begin(), geo.end());
        bool strict = contains_geo && sup.size() > geo.size();
        std::cout << "  support strictly contains the midpoints geometry: "
                  << (strict ? "yes" : "NO") << "\n";
        if (!strict) return 1;
        supports.push_back(std::move(sup));
    }
    bool distinct = supports[0] != supports[1];
    std::cout << "the two supports are distinct: " << (distinct ? "yes" : "NO") << "\n";
    std::cout << "conclusion: no realization uses only the forced edges, and distinct minimal"
                 " geometries realize the same structure\n";
    return distinct ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"midpoints structures, tree-metric realization, and the 3-SAT reduction"};
    app.require_subcommand(1);

    std::string cnf, input, output, structure, tree, report, assignment, to, correction = "recursion";
    std::size_t n = 3, cap = 8;
    unsigned jobs = 1;
    std::uint64_t samples = 0, seed = 1;
    bool collect_all = false, list_all = false;

    auto* enc = app.add_subcommand("encode", "encode a 3-CNF case as a midpoints structure");
    enc->add_option("--cnf", cnf, "DIMACS input (3 distinct variables per clause)")->required();
    enc->add_option("--output", output, "structure file (stdout when omitted)");

    auto* conv = app.add_subcommand("convert", "convert between midpoints and triples");
    conv->add_option("--input", input)->required();
    conv->add_option("--to", to, "'triples' or 'midpoints'")->required();
    conv->add_option("--output", output);

    auto* chk = app.add_subcommand("check", "verify a tree against a structure");
    chk->add_option("--structure", structure)->required();
    chk->add_option("--tree", tree)->required();
    chk->add_option("--report", report, "write the per-pair report here");
    chk->add_flag("--all", collect_all, "evaluate every pair even after a violation");

    auto* rel = app.add_subcommand("realize", "build and verify the candidate tree for (case, assignment)");
    rel->add_option("--cnf", cnf)->required();
    rel->add_option("--assignment", assignment)->required();
    rel->add_option("--tree-out", tree, "write the candidate tree here");
    rel->add_option("--report", report);
    rel->add_option("--correction", correction, "'recursion' (default) or 'solve'");

    auto* ext = app.add_subcommand("extract", "read an assignment off a realization");
    ext->add_option("--cnf", cnf)->required();
    ext->add_option("--tree", tree)->required();
    ext->add_option("--output", output);

    auto* orc = app.add_subcommand("oracle", "small-instance brute-force realizability");
    orc->add_option("--structure", structure)->required();
    orc->add_option("--cap", cap, "topology enumeration cap (default 8)");
    orc->add_option("--witness", output, "write a verified witness tree here");

    auto* cen = app.add_subcommand("census", "realizability census over all structures of size n");
    cen->add_option("--n", n)->required();
    cen->add_option("--jobs", jobs, "worker threads");
    cen->add_option("--samples", samples, "sample count (enables sampling mode)");
    cen->add_option("--seed", seed, "sampling seed");

    auto* sat = app.add_subcommand("sat", "brute-force satisfying assignments");
    sat->add_option("--cnf", cnf)->required();
    sat->add_flag("--list", list_all, "print every satisfying assignment");

    auto* war = app.add_subcommand("demo-warnow", "minimal-geometry demo for a one-clause case");
    war->add_option("--cnf", cnf)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(cnf, output);
        if (conv->parsed()) return cmd_convert(input, to, output);
        if (chk->parsed()) return cmd_check(structure, tree, report, collect_all);
        if (rel->parsed()) return cmd_realize(cnf, assignment, tree, report, correction);
        if (ext->parsed()) return cmd_extract(cnf, tree, output);
        if (orc->parsed()) return cmd_oracle(structure, cap, output);
        if (cen->parsed()) return cmd_census(n, jobs, samples, seed);
        if (sat->parsed()) return cmd_sat(cnf, list_all);
        if (war->parsed()) return cmd_demo_warnow(cnf);
    } catch (const midtree::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
