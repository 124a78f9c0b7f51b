#include "envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdut {

std::vector<double> make_grid(const GridSpec& spec) {
    if (spec.n < 16) throw std::invalid_argument("make_grid: grid size must be at least 16");
    std::vector<double> xs;
    xs.reserve(spec.n + 1 + 64);
    const double n = static_cast<double>(spec.n);
    for (std::size_t i = 0; i <= spec.n; ++i) xs.push_back(static_cast<double>(i) / n);
    if (spec.refine_ends) {
        const double delta = 1.0 / n;
        double step = delta;
        for (int k = 1; k <= 32; ++k) {
            step *= 0.5;
            xs.push_back(step);
            xs.push_back(1.0 - step);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

GridFunction::GridFunction(std::vector<double> nodes_in, std::vector<double> values_in)
    : nodes(std::move(nodes_in)), values(std::move(values_in)) {
    if (nodes.size() != values.size() || nodes.size() < 2)
        throw std::invalid_argument("GridFunction: need >= 2 nodes with matching values");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        throw std::invalid_argument("GridFunction: endpoints must be exactly 0 and 1");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("GridFunction: nodes must be strictly increasing");
}

GridFunction build_price_curve(const PricingKernel& kernel, const WeightingFunction& weighting,
                               const std::vector<double>& nodes) {
    std::vector<double> values(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        if (x == 0.0)
            values[i] = -kernel.mean();
        else if (x == 1.0)
            values[i] = 0.0;
        else
            values[i] = -kernel.partial_expectation(weighting.inverse(1.0 - x));
    }
    GridFunction f(nodes, std::move(values));
    for (std::size_t i = 1; i < f.size(); ++i)
        if (!(f.values[i] > f.values[i - 1]))
            throw std::runtime_error("build_price_curve: curve is not strictly increasing; "
                                     "kernel quantile must be positive on (0,1)");
    return f;
}

GridFunction build_price_curve(const PricingKernel& kernel, const WeightingFunction& weighting,
                               const GridSpec& spec) {
    return build_price_curve(kernel, weighting, make_grid(spec));
}

ConcaveEnvelope::ConcaveEnvelope(const GridFunction& f) {
    const std::vector<double>& x = f.nodes;
    const std::vector<double>& y = f.values;
    const std::size_t n = x.size();

    // Monotone-chain upper hull. A previous vertex b is discarded when the
    // chord a->c passes on or above it, i.e. slope(a,b) <= slope(b,c);
    // cross-multiplied to avoid dividing by tiny cell widths. Collinear
    // points are discarded too, so surviving segment slopes strictly decrease.
    std::vector<std::size_t> stack;
    stack.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        while (stack.size() >= 2) {
            const std::size_t b = stack[stack.size() - 1];
            const std::size_t a = stack[stack.size() - 2];
            const double lhs = (y[b] - y[a]) * (x[i] - x[b]);
            const double rhs = (y[i] - y[b]) * (x[b] - x[a]);
            if (lhs <= rhs)
                stack.pop_back();
            else
                break;
        }
        stack.push_back(i);
    }

    hull_x_.reserve(stack.size());
    hull_y_.reserve(stack.size());
    for (std::size_t idx : stack) {
        hull_x_.push_back(x[idx]);
        hull_y_.push_back(y[idx]);
    }
    slopes_.resize(hull_x_.size() - 1);
    skipped_.resize(hull_x_.size() - 1);
    for (std::size_t j = 0; j + 1 < hull_x_.size(); ++j) {
        slopes_[j] = (hull_y_[j + 1] - hull_y_[j]) / (hull_x_[j + 1] - hull_x_[j]);
        skipped_[j] = stack[j + 1] - stack[j] - 1;
    }
}

std::size_t ConcaveEnvelope::segment_index(double x) const {
    auto it = std::upper_bound(hull_x_.begin(), hull_x_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - hull_x_.begin());
    if (j == 0) return 0;
    return std::min(j - 1, slopes_.size() - 1);
}

double ConcaveEnvelope::value(double x) const {
    const std::size_t j = segment_index(x);
    return hull_y_[j] + slopes_[j] * (x - hull_x_[j]);
}

double ConcaveEnvelope::slope_right(double x) const { return slopes_[segment_index(x)]; }

double ConcaveEnvelope::slope_left(double x) const {
    auto it = std::lower_bound(hull_x_.begin(), hull_x_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - hull_x_.begin());
    if (j == 0) return slopes_.front();
    return slopes_[std::min(j - 1, slopes_.size() - 1)];
}

std::vector<double> cell_slopes(const ConcaveEnvelope& env, const std::vector<double>& nodes) {
    std::vector<double> s(nodes.size() - 1);
    std::size_t j = 0;
    const std::vector<double>& hx = env.hull_x();
    const std::vector<double>& sl = env.segment_slopes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        while (j + 1 < sl.size() && hx[j + 1] <= nodes[i]) ++j;
        s[i] = sl[j];
    }
    return s;
}

} // namespace rdut
