#pragma once

#include <string>

#include "errors.hpp"
#include "solver.hpp"

namespace rdut {

/// Parse a problem from a JSON document of the form
///   { "x0": 1.0,
///     "utility":  { "family": "crra", "gamma": 2.0 },
///     "weighting": { "family": "identity" },
///     "kernel":   { "family": "lognormal", "mu": -0.02, "sigma": 0.2 },
///     "grid":     { "n": 4096, "refine_ends": true } }
/// Throws config_error with field diagnostics on any problem.
Problem problem_from_json_text(const std::string& text);
Problem problem_from_json_file(const std::string& path);

/// Tabulated kernels load from CSV with header "p,quantile": strictly
/// increasing p in (0,1) and positive non-decreasing quantile values.
PricingKernel tabulated_kernel_from_csv(const std::string& path);

} // namespace rdut
