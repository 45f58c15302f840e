// Command-line driver.
//
//   walg construct  --n N --l L --epsilon {+,-} [--dump-pyramid PATH]
//   walg generators --n N --l L --epsilon {+,-} --max-r R --out PATH
//   walg verify     --suite NAME --n N --l L --epsilon {+,-}
//                   [--max-r R] [--jobs K] [--seed S] --report PATH
//
// Exit codes: 0 all checks pass, 1 mathematical failure, 2 usage or I/O error.
// WALG_JOBS sets the default worker count.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "walg/report.hpp"
#include "walg/serialize.hpp"
#include "walg/smap.hpp"
#include "walg/walgebra.hpp"

namespace {

walg::Config config_from(int n, int l, const std::string& epsilon) {
    return walg::make_config(n, l, walg::parse_sign(epsilon));
}

int run_construct(int n, int l, const std::string& epsilon, const std::string& dump_path) {
    const walg::Config cfg = config_from(n, l, epsilon);
    const walg::Pyramid pyr = walg::Pyramid::standard(cfg);
    auto alg = walg::Algebra::make(cfg, pyr);
    std::cout << "g^" << walg::sign_string(cfg.epsilon) << "_" << cfg.N() << ": dim " << alg->dim()
              << " (h " << alg->h_count() << ", m " << alg->m_count() << "), phi = "
              << walg::sign_string(cfg.phi) << ", e = " << alg->e().to_string() << "\n";
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) {
            std::cerr << "error: cannot open " << dump_path << "\n";
            return 2;
        }
        out << walg::pyramid_to_json(pyr).dump(2) << "\n";
        if (!out) {
            std::cerr << "error: write failed for " << dump_path << "\n";
            return 2;
        }
        std::cout << "pyramid dumped to " << dump_path << "\n";
    }
    return 0;
}

int run_generators(int n, int l, const std::string& epsilon, int max_r,
                   const std::string& out_path) {
    const walg::Config cfg = config_from(n, l, epsilon);
    auto alg = walg::Algebra::make(cfg);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
    }
    std::size_t count = 0;
    for (int i : walg::index_set(cfg.n))
        for (int j : walg::index_set(cfg.n))
            for (int r = 1; r <= max_r; ++r) {
                walg::UEAElement w = walg::w_generator(alg, i, j, r);
                out << walg::generator_row_to_json(cfg, i, j, r, w).dump() << "\n";
                ++count;
            }
    if (!out) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return 2;
    }
    std::cout << count << " generators written to " << out_path << "\n";
    return 0;
}

int run_verify(const std::string& suite, int n, int l, const std::string& epsilon, int max_r,
               int jobs, unsigned long seed, const std::string& report_path) {
    const walg::Config cfg = config_from(n, l, epsilon);
    walg::CheckOptions opt;
    opt.max_r = max_r;
    opt.seed = seed;
    walg::VerificationPlan plan;
    plan.jobs = jobs;
    plan.report_path = report_path;
    if (suite == "all") {
        for (const std::string& name : walg::suite_names()) plan.entries.push_back({cfg, name, opt});
    } else {
        plan.entries.push_back({cfg, suite, opt});
    }
    const walg::Report report = walg::run_suite(plan);
    std::cout << report.passed << "/" << report.rows.size() << " checks passed in "
              << report.wall_seconds << "s (" << report.jobs << " jobs)\n";
    for (const auto& row : report.rows)
        if (!row.pass)
            std::cout << "FAIL " << row.suite << " " << row.params.dump() << "\n";
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for finite W-algebras of rectangular nilpotents in "
                 "orthogonal/symplectic Lie algebras and their twisted-Yangian images"};
    app.set_version_flag("--version", walg::kToolkitVersion);
    app.require_subcommand(1);

    int n = 1, l = 1;
    std::string epsilon;

    auto add_config_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of Jordan blocks")->required();
        cmd->add_option("--l", l, "Jordan block size")->required();
        cmd->add_option("--epsilon", epsilon, "sign of the bilinear form (+ or -)")->required();
    };

    auto* construct = app.add_subcommand("construct", "build a configuration and its pyramid");
    std::string dump_path;
    add_config_options(construct);
    construct->add_option("--dump-pyramid", dump_path, "write the pyramid as JSON");

    auto* generators = app.add_subcommand("generators", "export W-algebra generators as JSON rows");
    int max_r = 0;
    std::string out_path;
    add_config_options(generators);
    generators->add_option("--max-r", max_r, "largest r to export")->required();
    generators->add_option("--out", out_path, "output path (one JSON row per generator)")
        ->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string report_path;
    int jobs = 0;
    unsigned long seed = walg::kDefaultSeed;
    int verify_max_r = 0;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"invariance", "images", "kernel", "symmetry", "pbw", "centralizer",
                               "lemma4", "all"}));
    add_config_options(verify);
    verify->add_option("--max-r", verify_max_r, "override the default r range (l+3)");
    verify->add_option("--jobs", jobs, "worker threads (default: WALG_JOBS or hardware)");
    verify->add_option("--seed", seed, "seed for sampled property checks");
    verify->add_option("--report", report_path, "newline-delimited JSON report path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(n, l, epsilon, dump_path);
        if (generators->parsed()) return run_generators(n, l, epsilon, max_r, out_path);
        if (verify->parsed())
            return run_verify(suite, n, l, epsilon, verify_max_r, jobs, seed, report_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
