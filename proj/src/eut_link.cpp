#include "eut_link.hpp"

#include <cmath>
#include <stdexcept>

namespace rdut {

TransformedKernel::TransformedKernel(std::shared_ptr<const ConcaveEnvelope> env)
    : env_(std::move(env)) {
    if (!env_) throw std::invalid_argument("TransformedKernel: null envelope");
    const auto& sl = env_->segment_slopes();
    const auto& hx = env_->hull_x();
    const auto& skipped = env_->skipped_nodes();
    for (std::size_t j = 0; j < sl.size(); ++j)
        if (skipped[j] > 0) atoms_.push_back({sl[j], hx[j + 1] - hx[j]});
}

TransformedKernel transformed_kernel(std::shared_ptr<const ConcaveEnvelope> env) {
    return TransformedKernel(std::move(env));
}

double TransformedKernel::quantile(double x) const {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("TransformedKernel::quantile: x outside (0,1)");
    // RCLL in x means taking the left limit of the slope at 1-x.
    return env_->slope_left(1.0 - x);
}

double TransformedKernel::mean() const { return env_->hull_y().back() - env_->hull_y().front(); }

double TransformedKernel::realize(double rho_value, const PricingKernel& rho) const {
    return env_->slope_right(1.0 - rho.cdf(rho_value));
}

double EUTSolution::wealth_quantile(double x) const {
    return utility.inverse_marginal(multiplier *
                                    (x >= 1.0 ? envelope->slope_left(1.0) : envelope->slope_right(x)));
}

std::vector<double> EUTSolution::wealth_quantile_on(const std::vector<double>& nodes) const {
    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = wealth_quantile(nodes[i]);
    return out;
}

namespace {

// Budget of the candidate X = (u')^{-1}(eta * rho_tilde), summed exactly
// over envelope segments.
double eut_budget(const ConcaveEnvelope& env, const UtilityFunction& u, double eta) {
    const auto& hx = env.hull_x();
    const auto& sl = env.segment_slopes();
    double sum = 0.0;
    for (std::size_t j = 0; j < sl.size(); ++j)
        sum += u.inverse_marginal(eta * sl[j]) * sl[j] * (hx[j + 1] - hx[j]);
    return sum;
}

} // namespace

EUTSolution solve_eut(const UtilityFunction& u, const TransformedKernel& t, double x0) {
    if (!(x0 > 0.0)) throw infeasible_error("solve_eut: x0 must be positive");
    const ConcaveEnvelope& env = t.envelope();

    const auto eval = [&](double eta) { return eut_budget(env, u, eta); };

    constexpr double kEtaMin = 1e-12, kEtaMax = 1e12;
    double lo = 1.0, hi = 1.0;
    if (eval(1.0) >= x0) {
        while (true) {
            hi *= 2.0;
            const double b = eval(hi);
            if (std::isfinite(b) && b <= x0) break;
            if (hi > kEtaMax) throw ill_posed_error("solve_eut: no bracket below 1e12");
        }
        lo = hi / 2.0;
    } else {
        while (true) {
            lo *= 0.5;
            const double b = eval(lo);
            if (!std::isfinite(b) || b >= x0) break;
            if (lo < kEtaMin) throw ill_posed_error("solve_eut: no bracket above 1e-12");
        }
        hi = lo * 2.0;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (eval(mid) >= x0)
            lo = mid;
        else
            hi = mid;
    }

    EUTSolution sol;
    sol.multiplier = 0.5 * (lo + hi);
    sol.utility = u;
    sol.envelope = t.envelope_ptr();
    sol.budget_residual = eval(sol.multiplier) - x0;

    const auto& hx = env.hull_x();
    const auto& sl = env.segment_slopes();
    double obj = 0.0;
    for (std::size_t j = 0; j < sl.size(); ++j)
        obj += u.value(u.inverse_marginal(sol.multiplier * sl[j])) * (hx[j + 1] - hx[j]);
    sol.objective = obj;
    return sol;
}

double rdut_from_eut(const EUTSolution& e, const WeightingFunction& w, const PricingKernel& k,
                     double rho_value) {
    if (!(rho_value > 0.0)) throw std::domain_error("rdut_from_eut: rho must be positive");
    const double x = 1.0 - w.value(k.cdf(rho_value));
    return e.wealth_quantile(x);
}

EUTSolution eut_from_rdut(const Solution& s, const TransformedKernel& t) {
    EUTSolution sol;
    sol.multiplier = s.multiplier;
    sol.utility = s.problem.utility;
    sol.envelope = s.envelope;
    sol.objective = s.objective;
    sol.budget_residual = eut_budget(t.envelope(), s.problem.utility, s.multiplier) - s.problem.x0;
    return sol;
}

ProblemDiagnostics diagnose(const Problem& p) {
    ProblemDiagnostics d;
    d.feasible = p.x0 >= 0.0;
    d.degenerate = p.x0 == 0.0;
    if (!d.feasible) return d;
    if (d.degenerate) {
        // X = 0 is the only admissible outcome; nothing to solve.
        d.well_posed = true;
        d.attainable = true;
        d.unique = true;
        return d;
    }
    try {
        GridFunction price = build_price_curve(p.kernel, p.weighting, p.grid);
        ConcaveEnvelope env(price);
        for (double lam : {1e-6, 1.0, 1e6}) {
            bool of = false;
            const double b = budget(env, price, p.utility, lam, &of);
            if (!of && std::isfinite(b)) {
                d.well_posed = true;
                break;
            }
        }
    } catch (const std::exception&) {
        return d;
    }
    if (!d.well_posed) return d;
    try {
        (void)solve(p);
        d.attainable = true;
        d.unique = true;
    } catch (const std::exception&) {
        // bracket not found: attainability fails, uniqueness moot
    }
    return d;
}

EutEquivalence eut_equivalence(const Solution& s) {
    const TransformedKernel t(s.envelope);
    const EUTSolution es = solve_eut(s.problem.utility, t, s.problem.x0);

    EutEquivalence eq;
    eq.mean_rho = s.problem.kernel.mean();
    eq.mean_rho_tilde = t.mean();
    eq.atom_count = t.atoms().size();
    eq.rdut_multiplier = s.multiplier;
    eq.eut_multiplier = es.multiplier;
    eq.rdut_objective = s.objective;
    eq.eut_objective = es.objective;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        const double x = s.grid[i];
        const double other = (i + 1 == s.grid.size()) ? es.wealth_quantile(1.0)
                                                      : es.wealth_quantile(x);
        eq.sup_distance = std::max(eq.sup_distance, std::abs(s.quantile[i] - other));
    }
    return eq;
}

} // namespace rdut
