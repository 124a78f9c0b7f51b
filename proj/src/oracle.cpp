#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdut {

DiscreteProblem make_discrete_problem(const Problem& p, std::size_t n) {
    if (n < 1) throw std::invalid_argument("make_discrete_problem: n must be >= 1");
    DiscreteProblem d;
    d.x0 = p.x0;
    d.utility = p.utility;
    const double dx = 1.0 / static_cast<double>(n);
    d.midpoints.resize(n);
    d.objective_weights.resize(n);
    d.price_weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * dx;
        d.midpoints[i] = x;
        d.objective_weights[i] = p.weighting.derivative(1.0 - x) * dx;
        d.price_weights[i] = p.kernel.quantile(1.0 - x) * dx;
    }
    return d;
}

namespace {

// Root of sum_a * u'(c) - multiplier * sum_b on c > 0. u' falls from
// +infinity to 0 (Inada), so a root always exists and is unique.
double pool_value(const UtilityFunction& u, double sum_a, double sum_b, double multiplier) {
    const double target = multiplier * sum_b;
    const auto h = [&](double c) { return sum_a * u.marginal(c) - target; };
    double lo = 1.0, hi = 1.0;
    while (h(lo) <= 0.0) {
        lo *= 0.5;
        if (lo < 1e-300) return 0.0;  // clamp: pooled optimum pinned at zero
    }
    while (h(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e300) return hi;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = h(mid);
        if (std::abs(v) <= 1e-12 * (1.0 + target)) return mid;
        if (v > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct Pool {
    double sum_a = 0.0;
    double sum_b = 0.0;
    double value = 0.0;
    std::size_t count = 0;
};

} // namespace

std::vector<double> isotonic_argmax(const DiscreteProblem& p, double multiplier) {
    if (!(multiplier > 0.0))
        throw std::domain_error("isotonic_argmax: multiplier must be positive");
    const std::size_t n = p.midpoints.size();
    std::vector<Pool> pools;
    pools.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Pool blk{p.objective_weights[i], p.price_weights[i], 0.0, 1};
        blk.value = pool_value(p.utility, blk.sum_a, blk.sum_b, multiplier);
        pools.push_back(blk);
        while (pools.size() >= 2 && pools[pools.size() - 2].value > pools.back().value) {
            Pool merged;
            merged.sum_a = pools[pools.size() - 2].sum_a + pools.back().sum_a;
            merged.sum_b = pools[pools.size() - 2].sum_b + pools.back().sum_b;
            merged.count = pools[pools.size() - 2].count + pools.back().count;
            merged.value = pool_value(p.utility, merged.sum_a, merged.sum_b, multiplier);
            pools.pop_back();
            pools.back() = merged;
        }
    }
    std::vector<double> q;
    q.reserve(n);
    for (const Pool& blk : pools) q.insert(q.end(), blk.count, blk.value);
    return q;
}

DiscreteSolution discrete_solve(const DiscreteProblem& p) {
    if (!(p.x0 > 0.0)) throw infeasible_error("discrete_solve: x0 must be positive");

    const auto budget_at = [&](double lam) {
        const std::vector<double> q = isotonic_argmax(p, lam);
        double s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * p.price_weights[i];
        return s;
    };

    constexpr double kMin = 1e-12, kMax = 1e12;
    double lo = 1.0, hi = 1.0;
    if (budget_at(1.0) >= p.x0) {
        while (true) {
            hi *= 2.0;
            const double b = budget_at(hi);
            if (std::isfinite(b) && b <= p.x0) break;
            if (hi > kMax) throw ill_posed_error("discrete_solve: no bracket below 1e12");
        }
        lo = hi / 2.0;
    } else {
        while (true) {
            lo *= 0.5;
            const double b = budget_at(lo);
            if (!std::isfinite(b) || b >= p.x0) break;
            if (lo < kMin) throw ill_posed_error("discrete_solve: no bracket above 1e-12");
        }
        hi = lo * 2.0;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (budget_at(mid) >= p.x0)
            lo = mid;
        else
            hi = mid;
    }

    DiscreteSolution sol;
    sol.multiplier = 0.5 * (lo + hi);
    sol.quantile = isotonic_argmax(p, sol.multiplier);
    sol.budget = 0.0;
    sol.objective = 0.0;
    for (std::size_t i = 0; i < sol.quantile.size(); ++i) {
        sol.budget += sol.quantile[i] * p.price_weights[i];
        sol.objective += p.utility.value_or_zero_limit(sol.quantile[i]) * p.objective_weights[i];
    }
    if (std::abs(sol.budget - p.x0) > 1e-8 * p.x0)
        throw ill_posed_error("discrete_solve: budget residual did not converge");
    return sol;
}

LatticeSearchResult enumerate_lattice_best(const DiscreteProblem& p,
                                           const std::vector<double>& levels, double band) {
    const std::size_t n = p.midpoints.size();
    if (levels.empty()) throw std::invalid_argument("enumerate_lattice_best: empty level set");
    std::vector<double> lv = levels;
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());

    double sum_b = 0.0;
    for (double b : p.price_weights) sum_b += b;
    const double flat = p.x0 / sum_b;
    if (lv.front() > flat || lv.back() < flat)
        throw std::invalid_argument(
            "enumerate_lattice_best: level set must bracket x0 / sum of price weights");

    if (band <= 0.0) {
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < lv.size(); ++i) min_gap = std::min(min_gap, lv[i] - lv[i - 1]);
        double min_b = *std::min_element(p.price_weights.begin(), p.price_weights.end());
        band = 0.5 * min_b * min_gap;
        if (!std::isfinite(band) || band <= 0.0) band = 1e-9 * p.x0;
    }

    const auto search = [&](double b) {
        LatticeSearchResult res;
        res.objective = -std::numeric_limits<double>::infinity();
        const std::size_t L = lv.size();
        std::vector<std::size_t> idx(n, 0);
        std::vector<double> q(n);
        while (true) {
            double bud = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                q[i] = lv[idx[i]];
                bud += q[i] * p.price_weights[i];
            }
            if (std::abs(bud - p.x0) <= b) {
                double obj = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    obj += p.utility.value_or_zero_limit(q[i]) * p.objective_weights[i];
                if (obj > res.objective) {
                    res.objective = obj;
                    res.budget = bud;
                    res.quantile = q;
                    res.found = true;
                }
            }
            // Next non-decreasing index vector: bump the rightmost index
            // that can grow, level the tail with it.
            std::size_t k = n;
            bool advanced = false;
            while (k > 0) {
                --k;
                if (idx[k] + 1 < L) {
                    ++idx[k];
                    for (std::size_t j = k + 1; j < n; ++j) idx[j] = idx[k];
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        return res;
    };

    LatticeSearchResult best = search(band);
    if (!best.found) {
        best = search(2.0 * band);
        best.widened_band = true;
    }
    return best;
}

OracleComparison compare_with_oracle(const Solution& s, std::size_t n) {
    const DiscreteProblem d = make_discrete_problem(s.problem, n);
    const DiscreteSolution ds = discrete_solve(d);

    OracleComparison cmp;
    cmp.oracle_n = n;
    cmp.solver_objective = s.objective;
    cmp.oracle_objective = ds.objective;
    cmp.objective_gap_rel =
        std::abs(s.objective - ds.objective) / std::max(1e-300, std::abs(s.objective));
    cmp.solver_multiplier = s.multiplier;
    cmp.oracle_multiplier = ds.multiplier;

    double l1 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        l1 += std::abs(ds.quantile[i] - wealth_quantile_at(s, d.midpoints[i]));
    cmp.l1_quantile_distance = l1 / static_cast<double>(n);
    return cmp;
}

OracleComparison compare_with_oracle(const Problem& p, std::size_t n) {
    return compare_with_oracle(solve(p), n);
}

} // namespace rdut
