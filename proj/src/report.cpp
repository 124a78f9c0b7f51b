#include "report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace rdut {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    return out;
}

void write_json_doc(const nlohmann::ordered_json& doc, const std::string& path) {
    std::ofstream out = open_out(path);
    out << doc.dump(2) << "\n";
    if (!out) throw io_error("failed writing '" + path + "'");
}

} // namespace

void write_curves_csv(const Solution& s, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "x,phi,delta,delta_prime,Q_star,G_star\n";
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        const double x = s.grid[i];
        out << format_full(x) << ',' << format_full(s.price_values[i]) << ','
            << format_full(s.envelope->value(x)) << ',' << format_full(s.envelope->slope_right(x))
            << ',' << format_full(s.quantile[i]) << ',' << format_full(s.wealth_quantile[i])
            << '\n';
    }
    if (!out) throw io_error("failed writing '" + path + "'");
}

void write_envelope_csv(const Solution& s, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "x,phi,delta,delta_prime\n";
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        const double x = s.grid[i];
        out << format_full(x) << ',' << format_full(s.price_values[i]) << ','
            << format_full(s.envelope->value(x)) << ',' << format_full(s.envelope->slope_right(x))
            << '\n';
    }
    if (!out) throw io_error("failed writing '" + path + "'");
}

void write_rho_tilde_csv(const Solution& s, const TransformedKernel& t, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "x,quantile\n";
    for (double x : s.grid)
        out << format_full(x) << ',' << format_full(t.envelope().slope_left(1.0 - x)) << '\n';
    if (!out) throw io_error("failed writing '" + path + "'");
}

void write_atoms_csv(const TransformedKernel& t, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "value,mass\n";
    for (const KernelAtom& a : t.atoms())
        out << format_full(a.value) << ',' << format_full(a.mass) << '\n';
    if (!out) throw io_error("failed writing '" + path + "'");
}

void write_solution_json(const Solution& s, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["lambda_star"] = s.multiplier;
    doc["objective_value"] = s.objective;
    doc["budget_residual"] = s.budget_residual;
    doc["grid_size"] = s.grid.size();
    write_json_doc(doc, path);
}

void write_monte_carlo_json(const MonteCarloReport& r, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    doc["empirical_objective"] = r.empirical_objective;
    doc["analytic_objective"] = r.analytic_objective;
    doc["objective_rel_error"] = r.objective_rel_error;
    doc["objective_within_band"] = r.objective_within_band;
    doc["empirical_budget"] = r.empirical_budget;
    doc["budget_standard_error"] = r.budget_standard_error;
    doc["budget_deviation_se"] = r.budget_deviation_se;
    doc["budget_within_band"] = r.budget_within_band;
    doc["x0"] = r.x0;
    write_json_doc(doc, path);
}

void write_oracle_json(const OracleComparison& r, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["oracle_n"] = r.oracle_n;
    doc["solver_objective"] = r.solver_objective;
    doc["oracle_objective"] = r.oracle_objective;
    doc["objective_gap_rel"] = r.objective_gap_rel;
    doc["l1_quantile_distance"] = r.l1_quantile_distance;
    doc["solver_lambda"] = r.solver_multiplier;
    doc["oracle_lambda"] = r.oracle_multiplier;
    write_json_doc(doc, path);
}

void write_eut_json(const EutEquivalence& r, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["sup_distance"] = r.sup_distance;
    doc["mean_rho"] = r.mean_rho;
    doc["mean_rho_tilde"] = r.mean_rho_tilde;
    doc["atom_count"] = r.atom_count;
    doc["lambda_star"] = r.rdut_multiplier;
    doc["eta"] = r.eut_multiplier;
    doc["rdut_objective"] = r.rdut_objective;
    doc["eut_objective"] = r.eut_objective;
    write_json_doc(doc, path);
}

} // namespace rdut
