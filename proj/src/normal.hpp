#pragma once

namespace rdut {

// Standard normal CDF, absolute error below 1e-15.
double normal_cdf(double z);

// Standard normal quantile (Wichura's AS241 PPND16), p in (0,1).
// Relative error of the returned deviate is about 1e-15.
double normal_quantile(double p);

// Standard normal density.
double normal_pdf(double z);

} // namespace rdut
