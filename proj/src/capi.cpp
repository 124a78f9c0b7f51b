#include "rdut/rdut.h"

#include <algorithm>
#include <random>
#include <string>

#include "config.hpp"
#include "eut_link.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "solver.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

rdut_status fail(rdut_status st, const std::string& what) {
    g_last_error = what;
    return st;
}

template <typename F>
rdut_status guarded(F&& f) {
    try {
        f();
        return RDUT_OK;
    } catch (const rdut::config_error& e) {
        return fail(RDUT_ERROR_CONFIG, e.what());
    } catch (const rdut::infeasible_error& e) {
        return fail(RDUT_ERROR_INFEASIBLE, e.what());
    } catch (const rdut::ill_posed_error& e) {
        return fail(RDUT_ERROR_ILL_POSED, e.what());
    } catch (const rdut::io_error& e) {
        return fail(RDUT_ERROR_IO, e.what());
    } catch (const std::domain_error& e) {
        return fail(RDUT_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RDUT_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(RDUT_ERROR_INTERNAL, e.what());
    }
}

rdut::Problem* unwrap(rdut_problem* p) { return reinterpret_cast<rdut::Problem*>(p); }
const rdut::Problem* unwrap(const rdut_problem* p) {
    return reinterpret_cast<const rdut::Problem*>(p);
}
const rdut::Solution* unwrap(const rdut_solution* s) {
    return reinterpret_cast<const rdut::Solution*>(s);
}

} // namespace

extern "C" {

const char* rdut_version(void) { return "0.1.0"; }

const char* rdut_last_error(void) { return g_last_error.c_str(); }

rdut_status rdut_problem_from_json(const char* json_text, rdut_problem** out) {
    if (!json_text || !out) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = reinterpret_cast<rdut_problem*>(
            new rdut::Problem(rdut::problem_from_json_text(json_text)));
    });
}

rdut_status rdut_problem_from_file(const char* path, rdut_problem** out) {
    if (!path || !out) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = reinterpret_cast<rdut_problem*>(
            new rdut::Problem(rdut::problem_from_json_file(path)));
    });
}

rdut_status rdut_problem_set_grid(rdut_problem* p, size_t n) {
    if (!p) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null problem");
    if (n < 16) return fail(RDUT_ERROR_INVALID_ARGUMENT, "grid size must be at least 16");
    unwrap(p)->grid.n = n;
    return RDUT_OK;
}

void rdut_problem_free(rdut_problem* p) { delete unwrap(p); }

rdut_status rdut_solve(const rdut_problem* p, rdut_solution** out) {
    if (!p || !out) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = reinterpret_cast<rdut_solution*>(new rdut::Solution(rdut::solve(*unwrap(p))));
    });
}

void rdut_solution_free(rdut_solution* s) { delete const_cast<rdut::Solution*>(unwrap(s)); }

double rdut_solution_lambda(const rdut_solution* s) { return unwrap(s)->multiplier; }
double rdut_solution_objective(const rdut_solution* s) { return unwrap(s)->objective; }
double rdut_solution_budget_residual(const rdut_solution* s) { return unwrap(s)->budget_residual; }
size_t rdut_solution_grid_size(const rdut_solution* s) { return unwrap(s)->grid.size(); }

rdut_status rdut_solution_curves(const rdut_solution* s, double* x, double* phi, double* delta,
                                 double* delta_prime, double* q_star, double* g_star) {
    if (!s) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null solution");
    const rdut::Solution& sol = *unwrap(s);
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
        if (x) x[i] = sol.grid[i];
        if (phi) phi[i] = sol.price_values[i];
        if (delta) delta[i] = sol.envelope->value(sol.grid[i]);
        if (delta_prime) delta_prime[i] = sol.envelope->slope_right(sol.grid[i]);
        if (q_star) q_star[i] = sol.quantile[i];
        if (g_star) g_star[i] = sol.wealth_quantile[i];
    }
    return RDUT_OK;
}

rdut_status rdut_solution_wealth(const rdut_solution* s, double rho, double* out) {
    if (!s || !out) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = rdut::optimal_wealth(*unwrap(s), rho); });
}

rdut_status rdut_solution_write_json(const rdut_solution* s, const char* path) {
    if (!s || !path) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { rdut::write_solution_json(*unwrap(s), path); });
}

rdut_status rdut_solution_write_curves_csv(const rdut_solution* s, const char* path) {
    if (!s || !path) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { rdut::write_curves_csv(*unwrap(s), path); });
}

rdut_status rdut_solution_write_envelope_csv(const rdut_solution* s, const char* path) {
    if (!s || !path) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { rdut::write_envelope_csv(*unwrap(s), path); });
}

rdut_status rdut_diagnose(const rdut_problem* p, rdut_diagnostics* out) {
    if (!p || !out) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const rdut::ProblemDiagnostics d = rdut::diagnose(*unwrap(p));
        out->feasible = d.feasible;
        out->degenerate = d.degenerate;
        out->well_posed = d.well_posed;
        out->attainable = d.attainable;
        out->unique = d.unique;
    });
}

rdut_status rdut_eut_equivalence(const rdut_solution* s, rdut_eut_report* out,
                                 const char* quantile_csv_path, const char* atoms_csv_path,
                                 const char* report_json_path) {
    if (!s) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null solution");
    return guarded([&] {
        const rdut::Solution& sol = *unwrap(s);
        const rdut::TransformedKernel t(sol.envelope);
        const rdut::EutEquivalence eq = rdut::eut_equivalence(sol);
        if (out) {
            out->sup_distance = eq.sup_distance;
            out->mean_rho = eq.mean_rho;
            out->mean_rho_tilde = eq.mean_rho_tilde;
            out->atom_count = eq.atom_count;
            out->lambda_star = eq.rdut_multiplier;
            out->eta = eq.eut_multiplier;
            out->rdut_objective = eq.rdut_objective;
            out->eut_objective = eq.eut_objective;
        }
        if (quantile_csv_path) rdut::write_rho_tilde_csv(sol, t, quantile_csv_path);
        if (atoms_csv_path) rdut::write_atoms_csv(t, atoms_csv_path);
        if (report_json_path) rdut::write_eut_json(eq, report_json_path);
    });
}

rdut_status rdut_oracle_compare(const rdut_solution* s, size_t grid_n, rdut_oracle_report* out,
                                const char* report_json_path) {
    if (!s) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null solution");
    if (grid_n < 1) return fail(RDUT_ERROR_INVALID_ARGUMENT, "oracle grid must be >= 1");
    return guarded([&] {
        const rdut::OracleComparison cmp = rdut::compare_with_oracle(*unwrap(s), grid_n);
        if (out) {
            out->oracle_n = cmp.oracle_n;
            out->solver_objective = cmp.solver_objective;
            out->oracle_objective = cmp.oracle_objective;
            out->objective_gap_rel = cmp.objective_gap_rel;
            out->l1_quantile_distance = cmp.l1_quantile_distance;
            out->solver_lambda = cmp.solver_multiplier;
            out->oracle_lambda = cmp.oracle_multiplier;
        }
        if (report_json_path) rdut::write_oracle_json(cmp, report_json_path);
    });
}

rdut_status rdut_oracle_exhaustive_check(const rdut_problem* p, size_t cells, size_t levels,
                                         uint64_t seed, int* agrees) {
    if (!p || !agrees) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null argument");
    if (cells < 1 || cells > 6 || levels < 2 || levels > 8)
        return fail(RDUT_ERROR_INVALID_ARGUMENT,
                    "exhaustive check expects 1..6 cells and 2..8 levels");
    return guarded([&] {
        const rdut::DiscreteProblem d = rdut::make_discrete_problem(*unwrap(p), cells);
        const rdut::DiscreteSolution ds = rdut::discrete_solve(d);

        std::vector<double> lattice(ds.quantile);
        std::sort(lattice.begin(), lattice.end());
        lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
        const double qmin = lattice.front(), qmax = lattice.back();
        const double span = std::max(qmax - qmin, 0.1 * std::max(1.0, qmax));
        std::mt19937_64 rng(seed);
        while (lattice.size() < levels) {
            const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
            const double cand = std::max(1e-6, qmin - 0.5 * span) + 2.0 * span * u;
            bool clear = true;
            for (double v : lattice)
                if (std::abs(v - cand) < 0.05 * span) clear = false;
            if (clear) {
                lattice.push_back(cand);
                std::sort(lattice.begin(), lattice.end());
            }
        }

        const rdut::LatticeSearchResult best = rdut::enumerate_lattice_best(d, lattice);
        *agrees = best.found && best.quantile == ds.quantile ? 1 : 0;
    });
}

rdut_status rdut_mc_verify(const rdut_solution* s, size_t n_samples, uint64_t seed,
                           rdut_mc_report* out, const char* report_json_path) {
    if (!s) return fail(RDUT_ERROR_INVALID_ARGUMENT, "null solution");
    if (n_samples < 1) return fail(RDUT_ERROR_INVALID_ARGUMENT, "need at least one sample");
    return guarded([&] {
        const rdut::MonteCarloReport rep = rdut::run_monte_carlo(*unwrap(s), n_samples, seed);
        if (out) {
            out->samples = rep.samples;
            out->seed = rep.seed;
            out->empirical_objective = rep.empirical_objective;
            out->analytic_objective = rep.analytic_objective;
            out->objective_rel_error = rep.objective_rel_error;
            out->empirical_budget = rep.empirical_budget;
            out->budget_standard_error = rep.budget_standard_error;
            out->budget_deviation_se = rep.budget_deviation_se;
            out->x0 = rep.x0;
            out->budget_within_band = rep.budget_within_band;
            out->objective_within_band = rep.objective_within_band;
        }
        if (report_json_path) rdut::write_monte_carlo_json(rep, report_json_path);
    });
}

} // extern "C"
