#include "preferences.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rdut {

namespace {

void require_unit_interval(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << who << ": argument " << p << " outside [0,1]";
        throw std::domain_error(os.str());
    }
}

// Safeguarded bisection with Newton acceleration for y = f(x) on [0,1],
// f strictly increasing. Newton steps are accepted only when they stay
// inside the current bracket; otherwise the step falls back to bisection.
template <typename F, typename DF>
double invert_monotone(const F& f, const DF& df, double y) {
    double lo = 0.0, hi = 1.0;
    double x = 0.5;
    for (int it = 0; it < 200; ++it) {
        double fx = f(x);
        if (fx < y)
            lo = x;
        else
            hi = x;
        if (hi - lo < 1e-15 * (1.0 + x) || fx == y) break;
        double next = 0.5 * (lo + hi);
        if (x > 0.0 && x < 1.0) {
            double d = df(x);
            if (d > 0.0 && std::isfinite(d)) {
                double newton = x - (fx - y) / d;
                if (newton > lo && newton < hi) next = newton;
            }
        }
        x = next;
    }
    return 0.5 * (lo + hi);
}

} // namespace

UtilityFunction UtilityFunction::crra(double gamma) {
    if (!(gamma > 0.0) || gamma == 1.0)
        throw std::invalid_argument("UtilityFunction::crra: gamma must be positive and != 1");
    return UtilityFunction(gamma, false);
}

UtilityFunction UtilityFunction::log_utility() { return UtilityFunction(1.0, true); }

double UtilityFunction::value(double x) const {
    if (!(x > 0.0)) throw std::domain_error("UtilityFunction::value: x must be positive");
    if (log_) return std::log(x);
    return std::pow(x, 1.0 - gamma_) / (1.0 - gamma_);
}

double UtilityFunction::value_or_zero_limit(double x) const {
    if (x > 0.0) return value(x);
    if (x == 0.0)
        return (!log_ && gamma_ < 1.0) ? 0.0 : -std::numeric_limits<double>::infinity();
    throw std::domain_error("UtilityFunction::value_or_zero_limit: x must be non-negative");
}

double UtilityFunction::marginal(double x) const {
    if (!(x > 0.0)) throw std::domain_error("UtilityFunction::marginal: x must be positive");
    if (log_) return 1.0 / x;
    return std::pow(x, -gamma_);
}

double UtilityFunction::inverse_marginal(double y) const {
    if (!(y > 0.0))
        throw std::domain_error("UtilityFunction::inverse_marginal: y must be positive");
    if (log_) return 1.0 / y;
    return std::pow(y, -1.0 / gamma_);
}

std::string UtilityFunction::describe() const {
    if (log_) return "log";
    std::ostringstream os;
    os << "crra(gamma=" << gamma_ << ")";
    return os.str();
}

WeightingFunction WeightingFunction::identity() {
    return WeightingFunction(Family::Identity, 0.0, 0.0);
}

WeightingFunction WeightingFunction::tversky_kahneman(double gamma) {
    // Below gamma ~ 0.279 the Tversky-Kahneman form loses monotonicity.
    if (!(gamma > 0.28 && gamma <= 1.0))
        throw std::invalid_argument(
            "WeightingFunction::tversky_kahneman: gamma must lie in (0.28, 1]");
    return WeightingFunction(Family::TverskyKahneman, gamma, 0.0);
}

WeightingFunction WeightingFunction::prelec(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("WeightingFunction::prelec: alpha, beta must be positive");
    return WeightingFunction(Family::Prelec, alpha, beta);
}

WeightingFunction WeightingFunction::power(double k) {
    if (!(k > 0.0)) throw std::invalid_argument("WeightingFunction::power: k must be positive");
    return WeightingFunction(Family::Power, k, 0.0);
}

double WeightingFunction::value(double p) const {
    require_unit_interval(p, "WeightingFunction::value");
    switch (family_) {
    case Family::Identity:
        return p;
    case Family::TverskyKahneman: {
        if (p == 0.0) return 0.0;
        if (p == 1.0) return 1.0;
        const double g = a_;
        const double pg = std::pow(p, g);
        const double qg = std::pow(1.0 - p, g);
        return pg / std::pow(pg + qg, 1.0 / g);
    }
    case Family::Prelec: {
        if (p == 0.0) return 0.0;
        if (p == 1.0) return 1.0;
        return std::exp(-b_ * std::pow(-std::log(p), a_));
    }
    case Family::Power:
        return std::pow(p, a_);
    }
    throw std::logic_error("unreachable");
}

double WeightingFunction::derivative(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("WeightingFunction::derivative: p must lie in (0,1)");
    switch (family_) {
    case Family::Identity:
        return 1.0;
    case Family::TverskyKahneman: {
        const double g = a_;
        const double q = 1.0 - p;
        const double pg = std::pow(p, g);
        const double qg = std::pow(q, g);
        const double A = pg + qg;
        // d/dp [ p^g (p^g + q^g)^(-1/g) ]
        //   = p^(g-1) A^(-1-1/g) [ (g-1) p^g + g q^g + p q^(g-1) ]
        const double bracket = (g - 1.0) * pg + g * qg + p * std::pow(q, g - 1.0);
        return std::pow(p, g - 1.0) * std::pow(A, -1.0 - 1.0 / g) * bracket;
    }
    case Family::Prelec: {
        const double l = -std::log(p);
        return value(p) * b_ * a_ * std::pow(l, a_ - 1.0) / p;
    }
    case Family::Power:
        return a_ * std::pow(p, a_ - 1.0);
    }
    throw std::logic_error("unreachable");
}

double WeightingFunction::inverse(double y) const {
    require_unit_interval(y, "WeightingFunction::inverse");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 1.0;
    switch (family_) {
    case Family::Identity:
        return y;
    case Family::Prelec:
        return std::exp(-std::pow(-std::log(y) / b_, 1.0 / a_));
    case Family::Power:
        return std::pow(y, 1.0 / a_);
    case Family::TverskyKahneman:
        return invert_monotone([this](double p) { return value(p); },
                               [this](double p) { return derivative(p); }, y);
    }
    throw std::logic_error("unreachable");
}

double WeightingFunction::dual_inverse(double x) const {
    require_unit_interval(x, "WeightingFunction::dual_inverse");
    return 1.0 - inverse(1.0 - x);
}

double WeightingFunction::dual_inverse_derivative(double x) const {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("WeightingFunction::dual_inverse_derivative: x must lie in (0,1)");
    return 1.0 / derivative(1.0 - dual_inverse(x));
}

std::string WeightingFunction::describe() const {
    std::ostringstream os;
    switch (family_) {
    case Family::Identity:
        return "identity";
    case Family::TverskyKahneman:
        os << "tversky_kahneman(gamma=" << a_ << ")";
        return os.str();
    case Family::Prelec:
        os << "prelec(alpha=" << a_ << ", beta=" << b_ << ")";
        return os.str();
    case Family::Power:
        os << "power(k=" << a_ << ")";
        return os.str();
    }
    throw std::logic_error("unreachable");
}

} // namespace rdut
