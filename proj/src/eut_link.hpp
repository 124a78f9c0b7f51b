#pragma once

#include <memory>
#include <vector>

#include "solver.hpp"

namespace rdut {

struct KernelAtom {
    double value = 0.0;
    double mass = 0.0;
};

/// Pricing kernel whose quantile function is the mirrored envelope slope,
/// F^{-1}(x) = slope(1-x). Every envelope segment that bridges grid nodes
/// turns into an atom of this kernel; it is atomless (up to grid
/// resolution) exactly when the price curve is strictly concave.
/// Depends on the envelope only, never on the utility function.
class TransformedKernel {
public:
    explicit TransformedKernel(std::shared_ptr<const ConcaveEnvelope> env);

    // Quantile function, non-decreasing and RCLL on (0,1).
    double quantile(double x) const;
    // Equals E[rho] of the original kernel: the envelope matches the price
    // curve at both endpoints, so the slopes integrate to the same total.
    double mean() const;
    const std::vector<KernelAtom>& atoms() const { return atoms_; }
    const ConcaveEnvelope& envelope() const { return *env_; }
    std::shared_ptr<const ConcaveEnvelope> envelope_ptr() const { return env_; }

    // Pathwise realization comonotonic with rho: slope(1 - F_rho(rho)).
    double realize(double rho_value, const PricingKernel& rho) const;

private:
    std::shared_ptr<const ConcaveEnvelope> env_;
    std::vector<KernelAtom> atoms_;
};

TransformedKernel transformed_kernel(std::shared_ptr<const ConcaveEnvelope> env);

/// Solution of the classical expected-utility problem priced by the
/// transformed kernel, obtained by the direct Lagrange method in quantile
/// space; no isotonic machinery is involved. Budget sums run over envelope
/// segments, where the kernel quantile is constant, so they are exact.
struct EUTSolution {
    double multiplier = 0.0;  // eta
    double objective = 0.0;
    double budget_residual = 0.0;
    UtilityFunction utility = UtilityFunction::crra(2.0);
    std::shared_ptr<const ConcaveEnvelope> envelope;

    // Quantile of the optimal wealth at a point / on a grid
    // (right-continuous; a node at 1 carries the left limit).
    double wealth_quantile(double x) const;
    std::vector<double> wealth_quantile_on(const std::vector<double>& nodes) const;
};

EUTSolution solve_eut(const UtilityFunction& u, const TransformedKernel& t, double x0);

/// Optimal wealth for the original problem reconstructed from the EUT
/// solution: wealth_quantile(1 - w(F_rho(rho))).
double rdut_from_eut(const EUTSolution& e, const WeightingFunction& w, const PricingKernel& k,
                     double rho_value);

/// The reverse map: the solved quantile is itself the EUT optimum, coupled
/// with the uniform variable F_rho(rho).
EUTSolution eut_from_rdut(const Solution& s, const TransformedKernel& t);

struct ProblemDiagnostics {
    bool feasible = false;    // x0 >= 0 given X >= 0
    bool degenerate = false;  // x0 == 0 forces X = 0
    bool well_posed = false;  // budget finite somewhere
    bool attainable = false;  // multiplier equation solvable
    bool unique = false;      // strict concavity, when attainable
};

ProblemDiagnostics diagnose(const Problem& p);

struct EutEquivalence {
    double sup_distance = 0.0;  // between the two optimal quantiles on the grid
    double mean_rho = 0.0;
    double mean_rho_tilde = 0.0;
    std::size_t atom_count = 0;
    double rdut_multiplier = 0.0;
    double eut_multiplier = 0.0;
    double rdut_objective = 0.0;
    double eut_objective = 0.0;
};

/// Solve the problem along both routes and measure how closely the optimal
/// quantiles and kernel means agree.
EutEquivalence eut_equivalence(const Solution& s);

} // namespace rdut
