#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "solver.hpp"

namespace rdut {

/// Empirical rank-dependent value of a sample: sort ascending and weight
/// the i-th smallest observation by w((N-i+1)/N) - w((N-i)/N). The weights
/// telescope to one exactly; with the identity weighting this is the plain
/// sample mean of u.
double empirical_rdut_value(std::vector<double> samples, const WeightingFunction& w,
                            const UtilityFunction& u);

struct EmpiricalBudget {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Sample mean and standard error of rho * wealth(rho).
EmpiricalBudget empirical_budget(const std::vector<double>& rho_samples,
                                 const std::function<double(double)>& wealth_map);

struct MonteCarloReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double empirical_objective = 0.0;
    double analytic_objective = 0.0;
    double objective_rel_error = 0.0;
    double empirical_budget = 0.0;
    double budget_standard_error = 0.0;
    double x0 = 0.0;
    // |empirical budget - x0| in units of its standard error.
    double budget_deviation_se = 0.0;
    bool budget_within_band = false;     // 4 standard errors
    bool objective_within_band = false;  // 1e-2 relative
};

/// Samples the kernel, pushes the draws through the optimal wealth map and
/// checks the original probabilistic problem: empirical rank-dependent
/// value against the analytic objective, empirical budget against x0.
MonteCarloReport run_monte_carlo(const Solution& s, std::size_t n, std::uint64_t seed);

} // namespace rdut
