#include "pricing_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "normal.hpp"

namespace rdut {

namespace {

void require_open_unit(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream os;
        os << who << ": probability " << p << " outside (0,1)";
        throw std::domain_error(os.str());
    }
}

double uniform_open01(std::mt19937_64& rng) {
    // (k + 0.5) / 2^53 lies strictly inside (0,1).
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

PricingKernel PricingKernel::lognormal(double mu, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("PricingKernel::lognormal: sigma must be positive");
    PricingKernel k(Family::Lognormal);
    k.mu_ = mu;
    k.sigma_ = sigma;
    return k;
}

PricingKernel PricingKernel::constant(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("PricingKernel::constant: c must be positive");
    PricingKernel k(Family::Constant);
    k.c_ = c;
    return k;
}

PricingKernel PricingKernel::tabulated(std::vector<double> p, std::vector<double> q) {
    if (p.size() != q.size() || p.empty())
        throw std::invalid_argument("PricingKernel::tabulated: need equal-sized non-empty grids");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0 && p[i] < 1.0))
            throw std::invalid_argument("PricingKernel::tabulated: p nodes must lie in (0,1)");
        if (!(q[i] > 0.0))
            throw std::invalid_argument("PricingKernel::tabulated: quantile values must be positive");
        if (i > 0 && !(p[i] > p[i - 1]))
            throw std::invalid_argument("PricingKernel::tabulated: p nodes must be strictly increasing");
        if (i > 0 && q[i] < q[i - 1])
            throw std::invalid_argument("PricingKernel::tabulated: quantile values must be non-decreasing");
    }
    PricingKernel k(Family::Tabulated);
    k.tab_p_ = std::move(p);
    k.tab_q_ = std::move(q);
    // Running exact integral of the step quantile up to each node.
    const std::size_t m = k.tab_p_.size();
    k.tab_cum_.resize(m);
    k.tab_cum_[0] = k.tab_q_[0] * k.tab_p_[0];
    for (std::size_t i = 1; i < m; ++i)
        k.tab_cum_[i] = k.tab_cum_[i - 1] + k.tab_q_[i - 1] * (k.tab_p_[i] - k.tab_p_[i - 1]);
    return k;
}

double PricingKernel::quantile(double p) const {
    require_open_unit(p, "PricingKernel::quantile");
    switch (family_) {
    case Family::Lognormal:
        return std::exp(mu_ + sigma_ * normal_quantile(p));
    case Family::Constant:
        return c_;
    case Family::Tabulated: {
        // First node with tab_p_ > p; its predecessor's value applies.
        auto it = std::upper_bound(tab_p_.begin(), tab_p_.end(), p);
        if (it == tab_p_.begin()) return tab_q_.front();
        return tab_q_[static_cast<std::size_t>(it - tab_p_.begin()) - 1];
    }
    }
    throw std::logic_error("unreachable");
}

double PricingKernel::cdf(double t) const {
    switch (family_) {
    case Family::Lognormal:
        if (t <= 0.0) return 0.0;
        return normal_cdf((std::log(t) - mu_) / sigma_);
    case Family::Constant:
        return t >= c_ ? 1.0 : 0.0;
    case Family::Tabulated: {
        // Mass of {quantile <= t}: the right boundary of the last step at or below t.
        auto it = std::upper_bound(tab_q_.begin(), tab_q_.end(), t);
        if (it == tab_q_.begin()) return 0.0;
        std::size_t i = static_cast<std::size_t>(it - tab_q_.begin());  // q[i-1] <= t < q[i]
        return i < tab_p_.size() ? tab_p_[i] : 1.0;
    }
    }
    throw std::logic_error("unreachable");
}

double PricingKernel::mean() const {
    switch (family_) {
    case Family::Lognormal:
        return std::exp(mu_ + 0.5 * sigma_ * sigma_);
    case Family::Constant:
        return c_;
    case Family::Tabulated:
        return tab_cum_.back() + tab_q_.back() * (1.0 - tab_p_.back());
    }
    throw std::logic_error("unreachable");
}

double PricingKernel::partial_expectation(double p) const {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("PricingKernel::partial_expectation: p outside [0,1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return mean();
    switch (family_) {
    case Family::Lognormal:
        // Lognormal partial-moment identity: int_0^p F^{-1} = E[rho] * Phi(Phi^{-1}(p) - sigma).
        return mean() * normal_cdf(normal_quantile(p) - sigma_);
    case Family::Constant:
        return c_ * p;
    case Family::Tabulated: {
        auto it = std::upper_bound(tab_p_.begin(), tab_p_.end(), p);
        if (it == tab_p_.begin()) return tab_q_.front() * p;
        std::size_t i = static_cast<std::size_t>(it - tab_p_.begin()) - 1;
        return tab_cum_[i] + tab_q_[i] * (p - tab_p_[i]);
    }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> PricingKernel::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw std::invalid_argument("PricingKernel::sample: n must be >= 1");
    std::vector<double> out(n);
    if (family_ == Family::Constant) {
        std::fill(out.begin(), out.end(), c_);
        return out;
    }
    std::mt19937_64 rng(seed);
    for (double& v : out) v = quantile(uniform_open01(rng));
    return out;
}

std::string PricingKernel::describe() const {
    std::ostringstream os;
    switch (family_) {
    case Family::Lognormal:
        os << "lognormal(mu=" << mu_ << ", sigma=" << sigma_ << ")";
        return os.str();
    case Family::Constant:
        os << "constant(c=" << c_ << ")";
        return os.str();
    case Family::Tabulated:
        os << "tabulated(" << tab_p_.size() << " nodes)";
        return os.str();
    }
    throw std::logic_error("unreachable");
}

} // namespace rdut
