#include "solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rdut {

std::vector<double> increments(const std::vector<double>& node_values) {
    std::vector<double> d(node_values.size() - 1);
    for (std::size_t i = 0; i + 1 < node_values.size(); ++i)
        d[i] = node_values[i + 1] - node_values[i];
    return d;
}

std::vector<double> envelope_increments(const ConcaveEnvelope& env,
                                        const std::vector<double>& nodes) {
    const std::vector<double> s = cell_slopes(env, nodes);
    std::vector<double> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) d[i] = s[i] * (nodes[i + 1] - nodes[i]);
    return d;
}

std::vector<double> candidate_quantile_cells(const ConcaveEnvelope& env,
                                             const std::vector<double>& nodes,
                                             const UtilityFunction& u, double multiplier) {
    if (!(multiplier > 0.0))
        throw std::domain_error("candidate_quantile_cells: multiplier must be positive");
    std::vector<double> q = cell_slopes(env, nodes);
    for (double& v : q) v = u.inverse_marginal(multiplier * v);
    return q;
}

double budget(const ConcaveEnvelope& env, const GridFunction& price, const UtilityFunction& u,
              double multiplier, bool* overflow) {
    const std::vector<double> q = candidate_quantile_cells(env, price.nodes, u, multiplier);
    double sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        sum += q[i] * (price.values[i + 1] - price.values[i]);
    if (overflow) *overflow = !std::isfinite(sum);
    return sum;
}

double lagrangian_value(const std::vector<double>& cell_q, const std::vector<double>& nodes,
                        const std::vector<double>& measure_increments, const UtilityFunction& u,
                        double multiplier) {
    if (cell_q.size() != nodes.size() - 1 || measure_increments.size() != cell_q.size())
        throw std::invalid_argument("lagrangian_value: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < cell_q.size(); ++i) {
        sum += u.value_or_zero_limit(cell_q[i]) * (nodes[i + 1] - nodes[i]) -
               multiplier * cell_q[i] * measure_increments[i];
    }
    return sum;
}

Solution solve(const Problem& p) {
    if (!(p.x0 > 0.0)) {
        std::ostringstream os;
        os << "solve: initial budget x0 = " << p.x0
           << (p.x0 == 0.0 ? " forces the zero outcome (degenerate)" : " is not attainable with X >= 0");
        throw infeasible_error(os.str());
    }

    const std::vector<double> nodes = make_grid(p.grid);
    GridFunction price = build_price_curve(p.kernel, p.weighting, nodes);
    auto env = std::make_shared<const ConcaveEnvelope>(price);

    SolveDiagnostics diag;
    diag.truncation_epsilon = nodes[1] - nodes[0];

    bool overflow = false;
    const auto eval = [&](double lam) {
        bool of = false;
        double b = budget(*env, price, p.utility, lam, &of);
        overflow = overflow || of;
        return b;
    };

    // Bracket the root of budget(lambda) = x0 by doubling/halving from 1.
    // budget is strictly decreasing, so lo < hi with budget(lo) >= x0 >= budget(hi).
    // An overflowed probe reads as budget above x0, which is what a huge
    // finite sum means for the bracket.
    constexpr double kLambdaMin = 1e-12, kLambdaMax = 1e12;
    double lo = 1.0, hi = 1.0;
    if (eval(1.0) >= p.x0 || overflow) {
        while (true) {
            hi *= 2.0;
            ++diag.bracket_steps;
            const double b = eval(hi);
            if (std::isfinite(b) && b <= p.x0) break;
            if (hi > kLambdaMax)
                throw ill_posed_error("solve: no multiplier bracket below 1e12; "
                                      "budget stays above x0");
        }
        lo = hi / 2.0;
    } else {
        while (true) {
            lo *= 0.5;
            ++diag.bracket_steps;
            const double b = eval(lo);
            if (!std::isfinite(b) || b >= p.x0) break;
            if (lo < kLambdaMin)
                throw ill_posed_error("solve: no multiplier bracket above 1e-12; "
                                      "budget stays below x0");
        }
        hi = lo * 2.0;
    }

    // Bisect until the bracket is resolved to machine precision; the budget
    // residual then lands far inside the 1e-8 * x0 contract, and independent
    // solves of the same root agree to ~1e-15 relative.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ++diag.bisect_steps;
        const double b = eval(mid);
        if (b >= p.x0)
            lo = mid;
        else
            hi = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    diag.multiplier_lo = lo;
    diag.multiplier_hi = hi;
    diag.budget_overflow = overflow;

    const double residual = eval(lambda) - p.x0;
    if (std::abs(residual) > 1e-8 * p.x0)
        throw ill_posed_error("solve: budget residual did not converge");

    const std::vector<double> q_cells = candidate_quantile_cells(*env, nodes, p.utility, lambda);

    Solution s;
    s.problem = p;
    s.multiplier = lambda;
    s.budget_residual = residual;
    s.grid = nodes;
    s.price_values = price.values;
    s.envelope = env;
    s.diagnostics = diag;

    double obj = 0.0;
    for (std::size_t i = 0; i < q_cells.size(); ++i)
        obj += p.utility.value(q_cells[i]) * (nodes[i + 1] - nodes[i]);
    s.objective = obj;

    s.quantile.resize(nodes.size());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) s.quantile[i] = q_cells[i];
    s.quantile.back() = q_cells.back();

    s.wealth_quantile.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s.wealth_quantile[i] = wealth_quantile_at(s, nodes[i]);

    return s;
}

double wealth_quantile_at(const Solution& s, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("wealth_quantile_at: x outside [0,1]");
    const double y = 1.0 - s.problem.weighting.value(1.0 - x);
    return s.problem.utility.inverse_marginal(s.multiplier * s.envelope->slope_right(y));
}

double optimal_wealth(const Solution& s, double rho_value) {
    if (!(rho_value > 0.0))
        throw std::domain_error("optimal_wealth: rho must be positive");
    return wealth_quantile_at(s, 1.0 - s.problem.kernel.cdf(rho_value));
}

TwoFormValue quantile_objective_forms(const std::function<double(double)>& G,
                                      const WeightingFunction& w, const UtilityFunction& u,
                                      std::size_t n) {
    if (n < 2) throw std::invalid_argument("quantile_objective_forms: n too small");
    // x = g(t) with g'(t) = 140 t^3 (1-t)^3 vanishing to third order at the
    // ends, so integrable power singularities of w' become C^1 integrands.
    const auto grade = [](double t) {
        return t * t * t * t * (35.0 - 84.0 * t + 70.0 * t * t - 20.0 * t * t * t);
    };
    const auto grade_prime = [](double t) {
        const double s = t * (1.0 - t);
        return 140.0 * s * s * s;
    };
    const double dt = 1.0 / static_cast<double>(n);
    TwoFormValue out;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * dt;
        const double x = grade(t);
        const double jac = grade_prime(t) * dt;
        out.distorted_form += u.value(G(x)) * w.derivative(1.0 - x) * jac;
        out.plain_form += u.value(G(w.dual_inverse(x))) * jac;
    }
    return out;
}

} // namespace rdut
