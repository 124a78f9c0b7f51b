/* rdut: portfolio choice under rank-dependent utility.
 *
 * C interface to the solver library. Handles are opaque; every function
 * that can fail returns an rdut_status, with a thread-local message
 * available from rdut_last_error(). Create/free pairs own their handles.
 */
#ifndef RDUT_H
#define RDUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RDUT_BUILD)
#define RDUT_API __declspec(dllexport)
#else
#define RDUT_API __declspec(dllimport)
#endif
#else
#define RDUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdut_status {
    RDUT_OK = 0,
    RDUT_ERROR_INVALID_ARGUMENT = 1,
    RDUT_ERROR_CONFIG = 2,
    RDUT_ERROR_INFEASIBLE = 3,
    RDUT_ERROR_ILL_POSED = 4,
    RDUT_ERROR_IO = 5,
    RDUT_ERROR_INTERNAL = 6
} rdut_status;

typedef struct rdut_problem rdut_problem;
typedef struct rdut_solution rdut_solution;

RDUT_API const char* rdut_version(void);
/* Message for the most recent failure on this thread; never NULL. */
RDUT_API const char* rdut_last_error(void);

/* ---- problem ---------------------------------------------------------- */

RDUT_API rdut_status rdut_problem_from_json(const char* json_text, rdut_problem** out);
RDUT_API rdut_status rdut_problem_from_file(const char* path, rdut_problem** out);
/* Override the grid resolution from the config (n >= 16). */
RDUT_API rdut_status rdut_problem_set_grid(rdut_problem* p, size_t n);
RDUT_API void rdut_problem_free(rdut_problem* p);

/* ---- solve ------------------------------------------------------------ */

RDUT_API rdut_status rdut_solve(const rdut_problem* p, rdut_solution** out);
RDUT_API void rdut_solution_free(rdut_solution* s);

RDUT_API double rdut_solution_lambda(const rdut_solution* s);
RDUT_API double rdut_solution_objective(const rdut_solution* s);
RDUT_API double rdut_solution_budget_residual(const rdut_solution* s);
RDUT_API size_t rdut_solution_grid_size(const rdut_solution* s);
/* Copy solution curves into caller arrays of grid_size elements; any
 * pointer may be NULL to skip that column. */
RDUT_API rdut_status rdut_solution_curves(const rdut_solution* s, double* x, double* phi,
                                          double* delta, double* delta_prime, double* q_star,
                                          double* g_star);
/* Optimal terminal wealth at a kernel realization rho > 0. */
RDUT_API rdut_status rdut_solution_wealth(const rdut_solution* s, double rho, double* out);

RDUT_API rdut_status rdut_solution_write_json(const rdut_solution* s, const char* path);
RDUT_API rdut_status rdut_solution_write_curves_csv(const rdut_solution* s, const char* path);
RDUT_API rdut_status rdut_solution_write_envelope_csv(const rdut_solution* s, const char* path);

/* ---- diagnostics ------------------------------------------------------ */

typedef struct rdut_diagnostics {
    int feasible;
    int degenerate;
    int well_posed;
    int attainable;
    int unique;
} rdut_diagnostics;

RDUT_API rdut_status rdut_diagnose(const rdut_problem* p, rdut_diagnostics* out);

/* ---- equivalent expected-utility problem ------------------------------ */

typedef struct rdut_eut_report {
    double sup_distance; /* between the two optimal quantiles on the grid */
    double mean_rho;
    double mean_rho_tilde;
    size_t atom_count;
    double lambda_star;
    double eta;
    double rdut_objective;
    double eut_objective;
} rdut_eut_report;

/* Any of the three paths may be NULL to skip that artifact. */
RDUT_API rdut_status rdut_eut_equivalence(const rdut_solution* s, rdut_eut_report* out,
                                          const char* quantile_csv_path,
                                          const char* atoms_csv_path, const char* report_json_path);

/* ---- brute-force oracle ------------------------------------------------ */

typedef struct rdut_oracle_report {
    size_t oracle_n;
    double solver_objective;
    double oracle_objective;
    double objective_gap_rel;
    double l1_quantile_distance;
    double solver_lambda;
    double oracle_lambda;
} rdut_oracle_report;

RDUT_API rdut_status rdut_oracle_compare(const rdut_solution* s, size_t grid_n,
                                         rdut_oracle_report* out, const char* report_json_path);

/* Cross-check the isotonic solver against exhaustive enumeration on a tiny
 * lattice built from its own solution levels plus seeded random ones.
 * Sets *agrees to 1 when the two coincide exactly. */
RDUT_API rdut_status rdut_oracle_exhaustive_check(const rdut_problem* p, size_t cells,
                                                  size_t levels, uint64_t seed, int* agrees);

/* ---- Monte-Carlo verification ------------------------------------------ */

typedef struct rdut_mc_report {
    size_t samples;
    uint64_t seed;
    double empirical_objective;
    double analytic_objective;
    double objective_rel_error;
    double empirical_budget;
    double budget_standard_error;
    double budget_deviation_se;
    double x0;
    int budget_within_band;    /* |mean - x0| <= 4 standard errors */
    int objective_within_band; /* relative error <= 1e-2 */
} rdut_mc_report;

RDUT_API rdut_status rdut_mc_verify(const rdut_solution* s, size_t n_samples, uint64_t seed,
                                    rdut_mc_report* out, const char* report_json_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RDUT_H */
