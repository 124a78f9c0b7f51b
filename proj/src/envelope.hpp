#pragma once

#include <cstddef>
#include <vector>

#include "preferences.hpp"
#include "pricing_kernel.hpp"

namespace rdut {

/// Grid on [0,1]: n uniform cells, optionally refined by 32 geometrically
/// shrinking nodes at each end (x = 2^-k / n and mirrored), which keeps the
/// hull accurate where the integrand steepens near the endpoints.
struct GridSpec {
    std::size_t n = 4096;
    bool refine_ends = true;
};

std::vector<double> make_grid(const GridSpec& spec);

/// Function sampled on a strictly increasing grid with endpoints 0 and 1.
struct GridFunction {
    std::vector<double> nodes;
    std::vector<double> values;

    GridFunction(std::vector<double> nodes_in, std::vector<double> values_in);
    std::size_t size() const { return nodes.size(); }
};

/// Quantile-space price curve: value at x is minus the partial expectation
/// of the kernel up to w^{-1}(1-x). It is strictly increasing with value
/// -E[rho] at 0 and 0 at 1, and its increments price quantile mass in the
/// budget constraint. Endpoint values are exact by construction.
GridFunction build_price_curve(const PricingKernel& kernel, const WeightingFunction& weighting,
                               const std::vector<double>& nodes);
GridFunction build_price_curve(const PricingKernel& kernel, const WeightingFunction& weighting,
                               const GridSpec& spec);

/// Least concave majorant of a grid function, stored as the upper hull of
/// its nodes. Hull vertices are a subsequence of the grid nodes (contact
/// set plus both endpoints); segment slopes are strictly decreasing, with
/// collinear runs collapsed into a single segment.
class ConcaveEnvelope {
public:
    explicit ConcaveEnvelope(const GridFunction& f);

    const std::vector<double>& hull_x() const { return hull_x_; }
    const std::vector<double>& hull_y() const { return hull_y_; }
    const std::vector<double>& segment_slopes() const { return slopes_; }
    // Number of input nodes strictly inside each segment; positive exactly
    // when the segment bridges over grid nodes (spans more than one cell).
    const std::vector<std::size_t>& skipped_nodes() const { return skipped_; }

    double value(double x) const;
    // Right-continuous derivative; defined on [0,1] with the boundary
    // values taken from the first/last segment.
    double slope_right(double x) const;
    double slope_left(double x) const;

    // Index of the hull segment whose half-open span [hull_x_[j], hull_x_[j+1])
    // contains x (clamped at the right end).
    std::size_t segment_index(double x) const;

private:
    std::vector<double> hull_x_, hull_y_, slopes_;
    std::vector<std::size_t> skipped_;
};

/// Envelope slope on each grid cell [nodes[i], nodes[i+1]); constant per
/// cell because hull vertices are grid nodes.
std::vector<double> cell_slopes(const ConcaveEnvelope& env, const std::vector<double>& nodes);

} // namespace rdut
