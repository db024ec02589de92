#pragma once

#include <vector>

#include "tbr/dataset.hpp"
#include "tbr/transform.hpp"

namespace tbr {

// Epanechnikov kernel K(u) = 0.75 (1 - u^2) on [-1, 1], 0 elsewhere.
inline double epanechnikov(double u) {
    return (u >= -1.0 && u <= 1.0) ? 0.75 * (1.0 - u * u) : 0.0;
}

// Local-constant boundary estimate: at each knot x_i the maximum of the
// transformed responses over the window |x_j - x_i| <= b. Immutable after
// construction; evaluation is pure.
class BoundaryFit {
public:
    // Precomputes the knot values with a sliding-window maximum, O(n).
    BoundaryFit(const Dataset& data, const TransformSpec& transform, double b);

    // Windowed max over {i : |x_i - x| <= b}; empty window falls back to
    // the nearest sample's transformed value.
    double eval_raw(double x) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& raw_values() const { return raw_values_; }
    const std::vector<double>& transformed_y() const { return transformed_y_; }
    double bandwidth_b() const { return b_; }

private:
    std::vector<double> knots_;
    std::vector<double> raw_values_;     // windowed max at each knot
    std::vector<double> transformed_y_;  // Lambda_theta(Y_i)
    double b_;
};

// Nadaraya-Watson smoothing of the raw knot values with the Epanechnikov
// kernel and bandwidth a.
class SmoothedBoundary {
public:
    SmoothedBoundary(const BoundaryFit& fit, double a);

    struct Value {
        double value;
        bool empty_window;  // true when no knot fell inside |x - X_i| <= a
    };
    Value eval(double x) const;

    // Smoothed values precomputed at the knots, same order as the dataset.
    const std::vector<double>& knot_values() const { return knot_values_; }
    const std::vector<double>& knots() const { return knots_; }
    double bandwidth_a() const { return a_; }

private:
    std::vector<double> knots_;
    std::vector<double> raw_values_;
    std::vector<double> knot_values_;
    double a_;
};

}  // namespace tbr
