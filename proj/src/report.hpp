#pragma once

#include <string>

#include "eut_link.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "verify.hpp"

namespace rdut {

/// Full round-trip decimal formatting (17 significant digits) so emitted
/// curves diff and re-parse exactly.
std::string format_full(double v);

// CSV artifacts. One row per grid node; headers are part of the format.
void write_curves_csv(const Solution& s, const std::string& path);       // x,phi,delta,delta_prime,Q_star,G_star
void write_envelope_csv(const Solution& s, const std::string& path);     // x,phi,delta,delta_prime
void write_rho_tilde_csv(const Solution& s, const TransformedKernel& t,
                         const std::string& path);                       // x,quantile
void write_atoms_csv(const TransformedKernel& t, const std::string& path);  // value,mass

// JSON artifacts.
void write_solution_json(const Solution& s, const std::string& path);
void write_monte_carlo_json(const MonteCarloReport& r, const std::string& path);
void write_oracle_json(const OracleComparison& r, const std::string& path);
void write_eut_json(const EutEquivalence& r, const std::string& path);

} // namespace rdut
