#pragma once

#include <string>
#include <vector>

namespace tbr {

// Parametric families of strictly increasing transformations with
// Lambda_theta(0) = 0.
enum class Family { YeoJohnson, SinhArcsinh, Identity };

// Yeo-Johnson power transformation (four branches). theta = 1 is the
// identity; bijective from R onto R for theta in [0, 2].
double yj_forward(double theta, double y);

// Inverse of yj_forward. For theta outside [0, 2] the forward map is not
// onto R; values of z outside the range throw std::range_error reporting
// the admissible interval.
double yj_inverse(double theta, double z);

// Admissible range (lo, hi) of the Yeo-Johnson map for a given theta.
struct Interval {
    double lo;
    double hi;
    bool contains(double z) const { return z > lo && z < hi; }
};
Interval yj_range(double theta);

// Shifted sinh-arcsinh transformation
//   Lambda(y) = sinh(theta1 * asinh(y) - theta2) - sinh(-theta2),
// theta1 > 0 (tailweight), theta2 real (skewness). Bijective on R.
double sas_forward(double theta1, double theta2, double y);
double sas_inverse(double theta1, double theta2, double z);

// Family identifier plus parameter vector: length 1 for YeoJohnson,
// 2 for SinhArcsinh, 0 for Identity.
struct TransformSpec {
    Family family = Family::Identity;
    std::vector<double> params;

    static TransformSpec identity() { return {Family::Identity, {}}; }
    static TransformSpec yeo_johnson(double theta) {
        return {Family::YeoJohnson, {theta}};
    }
    static TransformSpec sinh_arcsinh(double t1, double t2) {
        return {Family::SinhArcsinh, {t1, t2}};
    }

    // Throws std::invalid_argument on wrong arity or invalid parameters.
    void validate() const;

    double forward(double y) const;
    double inverse(double z) const;

    // True when z lies in the range of the forward map.
    bool in_range(double z) const;

    std::string name() const;
};

}  // namespace tbr
