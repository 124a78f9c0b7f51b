#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "envelope.hpp"
#include "errors.hpp"
#include "preferences.hpp"
#include "pricing_kernel.hpp"

namespace rdut {

/// Static portfolio choice problem: maximize the rank-dependent value of
/// terminal wealth X >= 0 subject to the pricing constraint E[rho X] = x0.
struct Problem {
    double x0 = 1.0;
    UtilityFunction utility = UtilityFunction::crra(2.0);
    WeightingFunction weighting = WeightingFunction::identity();
    PricingKernel kernel = PricingKernel::lognormal(-0.02, 0.2);
    GridSpec grid;
};

struct SolveDiagnostics {
    std::size_t bracket_steps = 0;
    std::size_t bisect_steps = 0;
    double multiplier_lo = 0.0;
    double multiplier_hi = 0.0;
    // Width of the first grid cell; with log utility the objective integrand
    // is effectively truncated there.
    double truncation_epsilon = 0.0;
    bool budget_overflow = false;
};

struct Solution {
    Problem problem;
    double multiplier = 0.0;       // Lagrange multiplier solving the budget equation
    double objective = 0.0;        // int_0^1 u(Q*(x)) dx
    double budget_residual = 0.0;  // budget(multiplier) - x0
    std::vector<double> grid;
    std::vector<double> price_values;  // price curve at grid nodes
    std::shared_ptr<const ConcaveEnvelope> envelope;
    // Optimal quantile in distortion-free coordinates, per node
    // (right-continuous; the node at 1 carries the left limit).
    std::vector<double> quantile;
    // Quantile function of the optimal wealth itself.
    std::vector<double> wealth_quantile;
    SolveDiagnostics diagnostics;
};

/// Pointwise maximizer of the relaxed Lagrangian, one value per grid cell:
/// the inverse marginal utility evaluated at multiplier times the envelope
/// slope. Non-decreasing across cells and strictly positive.
std::vector<double> candidate_quantile_cells(const ConcaveEnvelope& env,
                                             const std::vector<double>& nodes,
                                             const UtilityFunction& u, double multiplier);

/// Cost of the candidate quantile: Stieltjes sum of the candidate against
/// the exact per-cell increments of the price curve. Strictly decreasing
/// and continuous in the multiplier. Sets *overflow when the sum diverges.
double budget(const ConcaveEnvelope& env, const GridFunction& price, const UtilityFunction& u,
              double multiplier, bool* overflow = nullptr);

/// Lagrangian J(Q) = sum_i [ u(q_i) dx_i - multiplier * q_i * dm_i ] for a
/// per-cell quantile vector and per-cell measure increments (of the price
/// curve or of its envelope). u(0) is taken as the limit from the right,
/// -infinity when unbounded below.
double lagrangian_value(const std::vector<double>& cell_q, const std::vector<double>& nodes,
                        const std::vector<double>& measure_increments, const UtilityFunction& u,
                        double multiplier);

/// Per-cell increments of grid-node values / of the envelope.
std::vector<double> increments(const std::vector<double>& node_values);
std::vector<double> envelope_increments(const ConcaveEnvelope& env,
                                        const std::vector<double>& nodes);

Solution solve(const Problem& p);

/// Quantile of the optimal wealth at any x in [0,1], evaluated through the
/// envelope directly, not by grid interpolation.
double wealth_quantile_at(const Solution& s, double x);

/// Optimal terminal wealth at a kernel realization. Non-increasing in rho.
double optimal_wealth(const Solution& s, double rho_value);

/// Rank-dependent value of a quantile function computed two ways: against
/// the distorted measure in original coordinates, and as a plain integral
/// after the change of variable. Both use a midpoint rule under a
/// polynomial end-grading that tames integrable endpoint singularities of
/// the distortion derivative.
struct TwoFormValue {
    double distorted_form = 0.0;
    double plain_form = 0.0;
};
TwoFormValue quantile_objective_forms(const std::function<double(double)>& G,
                                      const WeightingFunction& w, const UtilityFunction& u,
                                      std::size_t n = 4096);

} // namespace rdut
