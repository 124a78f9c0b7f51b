#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rdut {

/// Positive pricing kernel (stochastic discount factor) described through
/// its quantile function. Lognormal kernels are atomless; tabulated and
/// constant kernels may carry atoms and exist mainly so transformed and
/// degenerate kernels can be represented with the same type.
class PricingKernel {
public:
    static PricingKernel lognormal(double mu, double sigma);
    static PricingKernel constant(double c);
    // Probability nodes p strictly increasing in (0,1); quantile values q
    // positive and non-decreasing. quantile() is the right-continuous step
    // interpolant through (p_i, q_i), extended by q_1 left of p_1.
    static PricingKernel tabulated(std::vector<double> p, std::vector<double> q);

    double quantile(double p) const;  // p in (0,1)
    double cdf(double t) const;
    double mean() const;
    // int_0^p quantile(y) dy, exact per family; p in [0,1].
    double partial_expectation(double p) const;

    // Inverse-transform sampling, reproducible for a given seed. The
    // uniforms are derived from the top 53 bits of mt19937_64 so the
    // stream does not depend on library distribution internals.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    bool atomless() const { return family_ == Family::Lognormal; }
    std::string describe() const;

private:
    enum class Family { Lognormal, Constant, Tabulated };
    PricingKernel(Family f) : family_(f) {}

    Family family_;
    double mu_ = 0.0, sigma_ = 1.0;  // lognormal
    double c_ = 1.0;                 // constant
    std::vector<double> tab_p_, tab_q_, tab_cum_;  // tabulated; tab_cum_[i] = PE(p_i)
};

} // namespace rdut
