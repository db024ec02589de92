#include "tbr/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace tbr {

namespace {

// Index of the knot closest to x (knots sorted ascending).
std::size_t nearest_index(const std::vector<double>& knots, double x) {
    auto it = std::lower_bound(knots.begin(), knots.end(), x);
    if (it == knots.end()) return knots.size() - 1;
    if (it == knots.begin()) return 0;
    const std::size_t hi = static_cast<std::size_t>(it - knots.begin());
    return (x - knots[hi - 1] <= knots[hi] - x) ? hi - 1 : hi;
}

}  // namespace

BoundaryFit::BoundaryFit(const Dataset& data, const TransformSpec& transform,
                         double b)
    : b_(b) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("BoundaryFit: bandwidth b must be positive");
    }
    transform.validate();
    const std::size_t n = data.size();
    knots_.resize(n);
    transformed_y_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        knots_[i] = data[i].x;
        const double z = transform.forward(data[i].y);
        if (!std::isfinite(z)) {
            throw std::domain_error("BoundaryFit: non-finite transformed response");
        }
        transformed_y_[i] = z;
    }

    // Sliding-window maximum over |x_j - x_i| <= b via a monotone deque.
    raw_values_.resize(n);
    std::deque<std::size_t> dq;  // indices with decreasing transformed_y_
    std::size_t lo = 0, hi = 0;  // window [lo, hi) already pushed
    for (std::size_t i = 0; i < n; ++i) {
        while (hi < n && knots_[hi] <= knots_[i] + b_) {
            while (!dq.empty() && transformed_y_[dq.back()] <= transformed_y_[hi]) {
                dq.pop_back();
            }
            dq.push_back(hi);
            ++hi;
        }
        while (lo < n && knots_[lo] < knots_[i] - b_) {
            if (!dq.empty() && dq.front() == lo) dq.pop_front();
            ++lo;
        }
        raw_values_[i] = transformed_y_[dq.front()];
    }
}

double BoundaryFit::eval_raw(double x) const {
    auto first = std::lower_bound(knots_.begin(), knots_.end(), x - b_);
    auto last = std::upper_bound(knots_.begin(), knots_.end(), x + b_);
    if (first == last) {
        return transformed_y_[nearest_index(knots_, x)];
    }
    double m = transformed_y_[static_cast<std::size_t>(first - knots_.begin())];
    for (auto it = first + 1; it != last; ++it) {
        m = std::max(m, transformed_y_[static_cast<std::size_t>(it - knots_.begin())]);
    }
    return m;
}

SmoothedBoundary::SmoothedBoundary(const BoundaryFit& fit, double a)
    : knots_(fit.knots()), raw_values_(fit.raw_values()), a_(a) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("SmoothedBoundary: bandwidth a must be positive");
    }
    knot_values_.resize(knots_.size());
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        knot_values_[i] = eval(knots_[i]).value;
    }
}

SmoothedBoundary::Value SmoothedBoundary::eval(double x) const {
    auto first = std::lower_bound(knots_.begin(), knots_.end(), x - a_);
    auto last = std::upper_bound(knots_.begin(), knots_.end(), x + a_);
    double num = 0.0, den = 0.0;
    for (auto it = first; it != last; ++it) {
        const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
        const double w = epanechnikov((x - knots_[i]) / a_);
        num += w * raw_values_[i];
        den += w;
    }
    if (den > 0.0) {
        return {num / den, false};
    }
    // Window empty or all weights vanish (knots only at the support edge).
    return {raw_values_[nearest_index(knots_, x)], true};
}

}  // namespace tbr
