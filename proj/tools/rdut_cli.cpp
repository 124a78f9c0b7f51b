// Command-line front end. Talks to the solver exclusively through the C
// API in rdut/rdut.h; emits CSV/JSON artifacts for plotting and regression
// testing.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "rdut/rdut.h"

namespace {

// 0 success, 1 config error, 2 infeasible, 3 ill-posed, 4 other failure,
// 5 verification bands violated.
int exit_code(rdut_status st) {
    switch (st) {
    case RDUT_OK:
        return 0;
    case RDUT_ERROR_CONFIG:
    case RDUT_ERROR_INVALID_ARGUMENT:
        return 1;
    case RDUT_ERROR_INFEASIBLE:
        return 2;
    case RDUT_ERROR_ILL_POSED:
        return 3;
    default:
        return 4;
    }
}

int complain(rdut_status st) {
    std::fprintf(stderr, "error: %s\n", rdut_last_error());
    return exit_code(st);
}

struct ProblemHandle {
    rdut_problem* p = nullptr;
    ~ProblemHandle() { rdut_problem_free(p); }
};

struct SolutionHandle {
    rdut_solution* s = nullptr;
    ~SolutionHandle() { rdut_solution_free(s); }
};

int load_and_solve(const std::string& config, std::size_t grid_override, ProblemHandle& ph,
                   SolutionHandle& sh) {
    rdut_status st = rdut_problem_from_file(config.c_str(), &ph.p);
    if (st != RDUT_OK) return complain(st);
    if (grid_override > 0) {
        st = rdut_problem_set_grid(ph.p, grid_override);
        if (st != RDUT_OK) return complain(st);
    }
    st = rdut_solve(ph.p, &sh.s);
    if (st != RDUT_OK) return complain(st);
    return 0;
}

std::string join(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rdut: portfolio choice under rank-dependent utility"};
    app.require_subcommand(1);

    std::string config, out_dir = ".";
    std::size_t grid = 0;
    std::size_t samples = 1000000;
    std::uint64_t seed = 12345;
    bool exhaustive = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config, "problem config (JSON)")->required();
        cmd->add_option("-o,--out-dir", out_dir, "output directory");
        cmd->add_option("-g,--grid", grid, "override grid size");
    };

    CLI::App* cmd_solve = app.add_subcommand("solve", "solve and export solution curves");
    add_common(cmd_solve);

    CLI::App* cmd_envelope = app.add_subcommand("envelope", "export the price curve and envelope");
    add_common(cmd_envelope);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Monte-Carlo check of the solution");
    add_common(cmd_verify);
    cmd_verify->add_option("-N,--samples", samples, "number of draws");
    cmd_verify->add_option("-s,--seed", seed, "random seed");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "compare against the brute-force solver");
    add_common(cmd_oracle);
    cmd_oracle->add_option("-s,--seed", seed, "seed for --exhaustive lattice levels");
    cmd_oracle->add_flag("--exhaustive", exhaustive, "also check tiny-lattice enumeration");

    CLI::App* cmd_eut = app.add_subcommand("eut", "equivalent expected-utility problem report");
    add_common(cmd_eut);

    CLI11_PARSE(app, argc, argv);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create out-dir '%s': %s\n", out_dir.c_str(),
                     ec.message().c_str());
        return 4;
    }

    if (cmd_solve->parsed()) {
        ProblemHandle ph;
        SolutionHandle sh;
        if (int rc = load_and_solve(config, grid, ph, sh)) return rc;
        rdut_status st = rdut_solution_write_json(sh.s, join(out_dir, "solution.json").c_str());
        if (st != RDUT_OK) return complain(st);
        st = rdut_solution_write_curves_csv(sh.s, join(out_dir, "curves.csv").c_str());
        if (st != RDUT_OK) return complain(st);
        std::printf("lambda_star=%.17g objective=%.17g budget_residual=%.3g grid=%zu\n",
                    rdut_solution_lambda(sh.s), rdut_solution_objective(sh.s),
                    rdut_solution_budget_residual(sh.s), rdut_solution_grid_size(sh.s));
        return 0;
    }

    if (cmd_envelope->parsed()) {
        ProblemHandle ph;
        SolutionHandle sh;
        if (int rc = load_and_solve(config, grid, ph, sh)) return rc;
        rdut_status st =
            rdut_solution_write_envelope_csv(sh.s, join(out_dir, "envelope.csv").c_str());
        if (st != RDUT_OK) return complain(st);
        std::printf("envelope.csv written (%zu rows)\n", rdut_solution_grid_size(sh.s));
        return 0;
    }

    if (cmd_verify->parsed()) {
        ProblemHandle ph;
        SolutionHandle sh;
        if (int rc = load_and_solve(config, grid, ph, sh)) return rc;
        rdut_mc_report rep;
        rdut_status st = rdut_mc_verify(sh.s, samples, seed, &rep,
                                        join(out_dir, "verify_report.json").c_str());
        if (st != RDUT_OK) return complain(st);
        std::printf("objective: empirical=%.8g analytic=%.8g rel_err=%.3g (%s)\n",
                    rep.empirical_objective, rep.analytic_objective, rep.objective_rel_error,
                    rep.objective_within_band ? "ok" : "FAIL");
        std::printf("budget: empirical=%.8g x0=%.8g dev=%.3g se (%s)\n", rep.empirical_budget,
                    rep.x0, rep.budget_deviation_se, rep.budget_within_band ? "ok" : "FAIL");
        return (rep.budget_within_band && rep.objective_within_band) ? 0 : 5;
    }

    if (cmd_oracle->parsed()) {
        ProblemHandle ph;
        SolutionHandle sh;
        if (int rc = load_and_solve(config, 0, ph, sh)) return rc;
        const std::size_t oracle_n = grid > 0 ? grid : 2000;
        if (exhaustive && oracle_n <= 6) {
            int agrees = 0;
            rdut_status st = rdut_oracle_exhaustive_check(ph.p, oracle_n, 8, seed, &agrees);
            if (st != RDUT_OK) return complain(st);
            std::printf("exhaustive(n=%zu): %s\n", oracle_n,
                        agrees ? "pava equals enumeration" : "DISAGREE");
            return agrees ? 0 : 5;
        }
        rdut_oracle_report rep;
        rdut_status st = rdut_oracle_compare(sh.s, oracle_n, &rep,
                                             join(out_dir, "oracle_report.json").c_str());
        if (st != RDUT_OK) return complain(st);
        std::printf("objective: solver=%.10g oracle=%.10g gap=%.3g L1(G)=%.3g\n",
                    rep.solver_objective, rep.oracle_objective, rep.objective_gap_rel,
                    rep.l1_quantile_distance);
        if (exhaustive) {
            int agrees = 0;
            st = rdut_oracle_exhaustive_check(ph.p, 5, 8, seed, &agrees);
            if (st != RDUT_OK) return complain(st);
            std::printf("exhaustive(n=5): %s\n",
                        agrees ? "pava equals enumeration" : "DISAGREE");
            if (!agrees) return 5;
        }
        return 0;
    }

    if (cmd_eut->parsed()) {
        ProblemHandle ph;
        SolutionHandle sh;
        if (int rc = load_and_solve(config, grid, ph, sh)) return rc;
        rdut_eut_report rep;
        rdut_status st = rdut_eut_equivalence(sh.s, &rep, join(out_dir, "rho_tilde.csv").c_str(),
                                              join(out_dir, "rho_tilde_atoms.csv").c_str(),
                                              join(out_dir, "eut_report.json").c_str());
        if (st != RDUT_OK) return complain(st);
        std::printf("sup|Q_rdut - Q_eut|=%.3g atoms=%zu E[rho]=%.12g E[rho_tilde]=%.12g\n",
                    rep.sup_distance, rep.atom_count, rep.mean_rho, rep.mean_rho_tilde);
        return 0;
    }

    return 0;
}
