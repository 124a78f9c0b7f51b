#pragma once

#include <string>

namespace rdut {

/// Strictly increasing, strictly concave utility on (0, inf).
/// Families: CRRA with u(x) = x^(1-gamma)/(1-gamma), gamma > 0, gamma != 1,
/// and logarithmic u(x) = ln x. Both satisfy the Inada conditions.
class UtilityFunction {
public:
    static UtilityFunction crra(double gamma);
    static UtilityFunction log_utility();

    double value(double x) const;
    // value() extended to x = 0 by the right limit; -infinity when the
    // utility is unbounded below (log, CRRA with gamma > 1).
    double value_or_zero_limit(double x) const;
    double marginal(double x) const;          // u'(x), strictly decreasing
    double inverse_marginal(double y) const;  // (u')^{-1}(y)

    bool is_log() const { return log_; }
    // Coefficient of relative risk aversion (1 for log).
    double risk_aversion() const { return log_ ? 1.0 : gamma_; }

    std::string describe() const;

private:
    UtilityFunction(double gamma, bool log_family) : gamma_(gamma), log_(log_family) {}
    double gamma_;
    bool log_;
};

/// Probability distortion w: [0,1] -> [0,1], strictly increasing,
/// w(0) = 0 and w(1) = 1 exactly.
///
/// The dual distortion x -> 1 - w(1-x) shows up when rewriting a
/// rank-dependent objective in quantile coordinates; dual_inverse() is
/// its inverse map and dual_inverse_derivative() the derivative of that
/// inverse, both defined on [0,1] (derivative on the open interval).
class WeightingFunction {
public:
    static WeightingFunction identity();
    static WeightingFunction tversky_kahneman(double gamma);  // gamma in (0.28, 1]
    static WeightingFunction prelec(double alpha, double beta);
    static WeightingFunction power(double k);

    double value(double p) const;       // w(p), p in [0,1]
    double derivative(double p) const;  // w'(p), p in (0,1)
    double inverse(double y) const;     // w^{-1}(y), y in [0,1]

    double dual_inverse(double x) const;             // 1 - w^{-1}(1-x)
    double dual_inverse_derivative(double x) const;  // 1 / w'(1 - dual_inverse(x))

    bool is_identity() const { return family_ == Family::Identity; }
    std::string describe() const;

private:
    enum class Family { Identity, TverskyKahneman, Prelec, Power };
    WeightingFunction(Family f, double a, double b) : family_(f), a_(a), b_(b) {}

    Family family_;
    double a_;  // TK gamma / Prelec alpha / Power exponent
    double b_;  // Prelec beta
};

} // namespace rdut
