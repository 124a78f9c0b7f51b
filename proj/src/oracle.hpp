#pragma once

#include <cstddef>
#include <vector>

#include "solver.hpp"

namespace rdut {

/// Midpoint discretization of the quantile problem in its original
/// coordinates: maximize sum_i u(G_i) a_i subject to sum_i G_i b_i = x0 and
/// 0 <= G_1 <= ... <= G_n. Cell midpoints keep the weighting derivative and
/// the kernel quantile away from 0 and 1 where they may blow up. Entirely
/// independent of the envelope machinery; the only utility call is u'.
struct DiscreteProblem {
    std::vector<double> midpoints;
    std::vector<double> objective_weights;  // a_i = w'(1 - x_i) / n
    std::vector<double> price_weights;      // b_i = F^{-1}(1 - x_i) / n, non-increasing
    double x0 = 1.0;
    UtilityFunction utility = UtilityFunction::crra(2.0);
};

DiscreteProblem make_discrete_problem(const Problem& p, std::size_t n);

/// Exact maximizer of sum_i [ u(Q_i) a_i - multiplier Q_i b_i ] over the
/// isotonic cone, by pool-adjacent-violators. Each pool's common value
/// solves sum_a * u'(c) = multiplier * sum_b by safeguarded bisection
/// (tolerance 1e-12 on that derivative), clamped at zero.
std::vector<double> isotonic_argmax(const DiscreteProblem& p, double multiplier);

struct DiscreteSolution {
    std::vector<double> quantile;
    double multiplier = 0.0;
    double objective = 0.0;
    double budget = 0.0;
};

/// Outer bisection on the multiplier so the budget binds to 1e-8 * x0.
DiscreteSolution discrete_solve(const DiscreteProblem& p);

struct LatticeSearchResult {
    std::vector<double> quantile;
    double objective = 0.0;
    double budget = 0.0;
    bool found = false;
    bool widened_band = false;
};

/// Ground-truth enumeration over all non-decreasing vectors with entries
/// from a small level set, keeping candidates whose budget lies within
/// `band` of x0 (default: half the minimal budget increment of the
/// lattice) and returning the best objective. If nothing lands in the
/// band, the band is widened once (doubled) and the result flagged.
LatticeSearchResult enumerate_lattice_best(const DiscreteProblem& p,
                                           const std::vector<double>& levels, double band = 0.0);

struct OracleComparison {
    std::size_t oracle_n = 0;
    double solver_objective = 0.0;
    double oracle_objective = 0.0;
    double objective_gap_rel = 0.0;
    double l1_quantile_distance = 0.0;
    double solver_multiplier = 0.0;
    double oracle_multiplier = 0.0;
};

/// Solve the problem both ways and report the objective gap and the mean
/// absolute distance between the two wealth quantiles at oracle midpoints.
OracleComparison compare_with_oracle(const Problem& p, std::size_t n);
OracleComparison compare_with_oracle(const Solution& s, std::size_t n);

} // namespace rdut
