// Command-line frontend: `solve` runs the bounding pipeline on one instance,
// `counts` prints integer-PSD family cardinalities, `verify` runs the
// exhaustive desk-scale audits.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "lagsdp/brute_force.hpp"
#include "lagsdp/instance_io.hpp"
#include "lagsdp/partitions.hpp"
#include "lagsdp/pipeline.hpp"
#include "lagsdp/rng.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitStageError = 3;

lagsdp::GraphInstance make_instance(const std::string& file, const std::string& gen,
                                    uint64_t seed, std::string& id) {
    if (!file.empty()) {
        id = file;
        return lagsdp::load_edge_list_file(file);
    }
    auto colon = gen.find(':');
    if (colon == std::string::npos) throw lagsdp::ParseError("--gen expects kind:args");
    const std::string kind = gen.substr(0, colon);
    const std::string args = gen.substr(colon + 1);
    auto comma = args.find(',');
    if (comma == std::string::npos) throw lagsdp::ParseError("--gen expects two comma-separated sizes");
    const int a = std::stoi(args.substr(0, comma));
    const int b = std::stoi(args.substr(comma + 1));
    id = gen;
    if (kind == "band") return lagsdp::generate_band(a, b, seed);
    if (kind == "torus") return lagsdp::generate_spinglass_torus(a, b, seed);
    throw lagsdp::ParseError("unknown generator \"" + kind + "\" (band or torus)");
}

lagsdp::GraphInstance random_gnp(int n, double density, uint64_t seed) {
    lagsdp::GraphInstance g;
    g.n = n;
    lagsdp::Rng rng(lagsdp::Rng::mix(seed));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < density) g.edges.push_back({i, j, 1.0});
    return g;
}

int run_verify() {
    struct Audit {
        std::string name;
        lagsdp::GraphInstance g;
        int k, p;
    };
    std::vector<Audit> audits;
    lagsdp::GraphInstance k3{3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}};
    lagsdp::GraphInstance k4{4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}};
    lagsdp::GraphInstance c5{5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}}};
    audits.push_back({"K3 k=2 p=3", k3, 2, 3});
    audits.push_back({"K3 k=3 p=3", k3, 3, 3});
    audits.push_back({"K4 k=2 p=4", k4, 2, 4});
    audits.push_back({"K4 k=3 p=4", k4, 3, 4});
    audits.push_back({"C5 k=2 p=3", c5, 2, 3});
    audits.push_back({"C5 k=2 p=5", c5, 2, 5});
    for (uint64_t s = 1; s <= 4; ++s) {
        audits.push_back({"gnp(8,0.5,#" + std::to_string(s) + ") k=2 p=3",
                          random_gnp(8, 0.5, 1000 + s), 2, 3});
        audits.push_back({"gnp(9,0.5,#" + std::to_string(s) + ") k=3 p=4",
                          random_gnp(9, 0.5, 2000 + s), 3, 4});
    }

    int failures = 0;
    for (const auto& a : audits) {
        try {
            auto [z_sdp, ld, opt] = lagsdp::sandwich_audit(a.g, a.k, a.p, 7);
            std::cout << "PASS " << a.name << ": opt " << opt << " <= ld " << ld << " <= sdp "
                      << z_sdp << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << a.name << ": " << e.what() << '\n';
        }
    }
    if (failures > 0) {
        std::cout << failures << " audit(s) failed\n";
        return 1;
    }
    std::cout << "all " << audits.size() << " audits passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangian dual bounds for integer SDPs (max-k-cut pipeline)"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "compute bounds for one instance");
    std::string instance_file, gen_spec, out_file, solver_str = "dsg", format_str = "csv";
    int k = 2, p = 3;
    uint64_t seed = 1;
    double opt_value = 0.0;
    bool have_opt = false;
    int max_iter = 0;
    double eps = 0.0, mu0 = 0.0, kappa = 0.0, rho = 0.0;
    auto* inst_opt = solve->add_option("--instance", instance_file, "edge-list file (\"n m\" header)");
    auto* gen_opt = solve->add_option("--gen", gen_spec, "band:n,k or torus:nt,nr");
    inst_opt->excludes(gen_opt);
    solve->add_option("--k", k, "number of clusters")->check(CLI::Range(2, 64));
    solve->add_option("--p", p, "maximum packing subset size")->check(CLI::Range(3, 64));
    solve->add_option("--solver", solver_str, "dsg | asg | bundle")
        ->check(CLI::IsMember({"dsg", "asg", "bundle"}));
    solve->add_option("--seed", seed, "RNG seed");
    solve->add_option("--out", out_file, "report file (stdout when omitted)");
    solve->add_option("--format", format_str, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    solve->add_option("--opt", opt_value, "known optimum (enables rel gap closed)")
        ->each([&](const std::string&) { have_opt = true; });
    solve->add_option("--max-iter", max_iter, "solver iteration cap override");
    solve->add_option("--eps", eps, "solver step tolerance override");
    solve->add_option("--mu0", mu0, "Polyak stepsize factor override");
    solve->add_option("--kappa", kappa, "bundle proximity scale override");
    solve->add_option("--rho", rho, "bundle serious-step fraction override");

    auto* counts = app.add_subcommand("counts", "cardinality of an integer PSD family");
    std::string family = "s01";
    unsigned cn = 5, cr = 5;
    counts->add_option("--family", family, "s01 | s0pm1")->check(CLI::IsMember({"s01", "s0pm1"}));
    counts->add_option("--n", cn, "matrix dimension")->required();
    counts->add_option("--r", cr, "rank bound")->required();

    auto* verify = app.add_subcommand("verify", "run the exhaustive desk-scale audits");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (instance_file.empty() && gen_spec.empty()) {
                std::cerr << "solve: one of --instance or --gen is required\n";
                return kExitParseError;
            }
            std::string id;
            lagsdp::GraphInstance g;
            try {
                g = make_instance(instance_file, gen_spec, seed, id);
            } catch (const lagsdp::ParseError& e) {
                std::cerr << "parse error: " << e.what() << '\n';
                return kExitParseError;
            }
            lagsdp::PipelineOptions opts;
            if (have_opt) opts.opt = opt_value;
            if (max_iter > 0) opts.max_iter = max_iter;
            if (eps > 0.0) opts.eps = eps;
            if (mu0 > 0.0) opts.mu0 = mu0;
            if (kappa > 0.0) opts.kappa = kappa;
            if (rho > 0.0) opts.rho = rho;
            lagsdp::SolverKind kind = solver_str == "dsg"   ? lagsdp::SolverKind::Dsg
                                      : solver_str == "asg" ? lagsdp::SolverKind::Asg
                                                            : lagsdp::SolverKind::Bundle;
            lagsdp::RunReport report;
            try {
                report = lagsdp::run_pipeline(g, id, k, p, kind, seed, opts);
            } catch (const lagsdp::StageError& e) {
                std::cerr << "stage failure: " << e.what() << '\n';
                return kExitStageError;
            }
            const auto format = format_str == "csv" ? lagsdp::ReportFormat::Csv
                                                    : lagsdp::ReportFormat::JsonLines;
            const std::string text = lagsdp::emit_report({report}, format);
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file);
                out << text;
            }
            return 0;
        }
        if (counts->parsed()) {
            if (cr < 1 || cr > cn) {
                std::cerr << "counts: need 1 <= r <= n\n";
                return kExitParseError;
            }
            mpz_class c = family == "s01" ? lagsdp::count_s01(cn, cr) : lagsdp::count_s0pm1(cn, cr);
            std::cout << c.get_str() << '\n';
            return 0;
        }
        if (verify->parsed()) return run_verify();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitStageError;
    }
    return 0;
}
