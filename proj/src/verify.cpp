#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdut {

double empirical_rdut_value(std::vector<double> samples, const WeightingFunction& w,
                            const UtilityFunction& u) {
    if (samples.empty()) throw std::invalid_argument("empirical_rdut_value: need samples");
    std::stable_sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double rank = static_cast<double>(i + 1);  // i-th smallest, 1-based
        const double weight = w.value((n - rank + 1.0) / n) - w.value((n - rank) / n);
        sum += u.value_or_zero_limit(samples[i]) * weight;
    }
    return sum;
}

EmpiricalBudget empirical_budget(const std::vector<double>& rho_samples,
                                 const std::function<double(double)>& wealth_map) {
    if (rho_samples.empty()) throw std::invalid_argument("empirical_budget: need samples");
    const double n = static_cast<double>(rho_samples.size());
    double sum = 0.0, sumsq = 0.0;
    for (double rho : rho_samples) {
        const double v = rho * wealth_map(rho);
        sum += v;
        sumsq += v * v;
    }
    EmpiricalBudget out;
    out.mean = sum / n;
    const double var = std::max(0.0, sumsq / n - out.mean * out.mean);
    out.standard_error = rho_samples.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    return out;
}

MonteCarloReport run_monte_carlo(const Solution& s, std::size_t n, std::uint64_t seed) {
    MonteCarloReport rep;
    rep.samples = n;
    rep.seed = seed;
    rep.x0 = s.problem.x0;
    rep.analytic_objective = s.objective;

    const std::vector<double> rho = s.problem.kernel.sample(n, seed);
    std::vector<double> wealth(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) wealth[i] = optimal_wealth(s, rho[i]);

    rep.empirical_objective =
        empirical_rdut_value(wealth, s.problem.weighting, s.problem.utility);
    rep.objective_rel_error = std::abs(rep.empirical_objective - rep.analytic_objective) /
                              std::max(1e-300, std::abs(rep.analytic_objective));

    const EmpiricalBudget eb = empirical_budget(rho, [&](double r) { return optimal_wealth(s, r); });
    rep.empirical_budget = eb.mean;
    rep.budget_standard_error = eb.standard_error;
    if (eb.standard_error > 0.0)
        rep.budget_deviation_se = std::abs(eb.mean - rep.x0) / eb.standard_error;
    else
        // Degenerate kernels produce identical draws; equality then holds
        // up to roundoff.
        rep.budget_deviation_se = std::abs(eb.mean - rep.x0) <= 1e-12 * std::max(1.0, std::abs(rep.x0))
                                      ? 0.0
                                      : std::numeric_limits<double>::infinity();
    rep.budget_within_band = rep.budget_deviation_se <= 4.0;
    rep.objective_within_band = rep.objective_rel_error <= 1e-2;
    return rep;
}

} // namespace rdut
