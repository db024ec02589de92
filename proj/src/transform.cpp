#include "tbr/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tbr {

namespace {

constexpr double kBranchEps = 1e-8;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

}  // namespace

double yj_forward(double theta, double y) {
    require_finite(theta, "theta");
    require_finite(y, "y");
    if (y >= 0.0) {
        // limit branch at theta = 0 is log(y + 1)
        if (std::abs(theta) < kBranchEps) {
            return std::log1p(y);
        }
        return std::expm1(theta * std::log1p(y)) / theta;
    }
    // y < 0, limit branch at theta = 2 is -log(-y + 1)
    const double p = 2.0 - theta;
    if (std::abs(p) < kBranchEps) {
        return -std::log1p(-y);
    }
    return -std::expm1(p * std::log1p(-y)) / p;
}

Interval yj_range(double theta) {
    // y >= 0 maps onto [0, sup) with sup = -1/theta for theta < 0;
    // y < 0 maps onto (inf, 0) with inf = 1/(2-theta) for theta > 2.
    double hi = theta < -kBranchEps ? -1.0 / theta : kInf;
    double lo = theta > 2.0 + kBranchEps ? 1.0 / (2.0 - theta) : -kInf;
    return {lo, hi};
}

double yj_inverse(double theta, double z) {
    require_finite(theta, "theta");
    require_finite(z, "z");
    const Interval range = yj_range(theta);
    if (!(z == 0.0 || range.contains(z))) {
        throw std::range_error(
            "yj_inverse: z=" + std::to_string(z) +
            " outside range (" + std::to_string(range.lo) + ", " +
            std::to_string(range.hi) + ") of the theta=" +
            std::to_string(theta) + " map");
    }
    if (z >= 0.0) {
        if (std::abs(theta) < kBranchEps) {
            return std::expm1(z);
        }
        // (theta z + 1)^(1/theta) - 1, theta z + 1 > 0 by the range check
        return std::expm1(std::log1p(theta * z) / theta);
    }
    const double p = 2.0 - theta;
    if (std::abs(p) < kBranchEps) {
        return -std::expm1(-z);
    }
    return -std::expm1(std::log1p(-p * z) / p);
}

double sas_forward(double theta1, double theta2, double y) {
    if (!(theta1 > 0.0)) {
        throw std::invalid_argument("sas_forward: theta1 must be positive");
    }
    require_finite(theta2, "theta2");
    require_finite(y, "y");
    if (y == 0.0) {
        return 0.0;
    }
    return std::sinh(theta1 * std::asinh(y) - theta2) - std::sinh(-theta2);
}

double sas_inverse(double theta1, double theta2, double z) {
    if (!(theta1 > 0.0)) {
        throw std::invalid_argument("sas_inverse: theta1 must be positive");
    }
    require_finite(theta2, "theta2");
    require_finite(z, "z");
    if (z == 0.0) {
        return 0.0;
    }
    const double u = std::asinh(z + std::sinh(-theta2));
    return std::sinh((u + theta2) / theta1);
}

void TransformSpec::validate() const {
    switch (family) {
        case Family::Identity:
            if (!params.empty()) {
                throw std::invalid_argument("Identity takes no parameters");
            }
            break;
        case Family::YeoJohnson:
            if (params.size() != 1) {
                throw std::invalid_argument("YeoJohnson takes one parameter");
            }
            require_finite(params[0], "theta");
            break;
        case Family::SinhArcsinh:
            if (params.size() != 2) {
                throw std::invalid_argument("SinhArcsinh takes two parameters");
            }
            if (!(params[0] > 0.0)) {
                throw std::invalid_argument("SinhArcsinh requires theta1 > 0");
            }
            require_finite(params[1], "theta2");
            break;
    }
}

double TransformSpec::forward(double y) const {
    switch (family) {
        case Family::Identity:
            require_finite(y, "y");
            return y;
        case Family::YeoJohnson:
            return yj_forward(params[0], y);
        case Family::SinhArcsinh:
            return sas_forward(params[0], params[1], y);
    }
    throw std::logic_error("unknown family");
}

double TransformSpec::inverse(double z) const {
    switch (family) {
        case Family::Identity:
            require_finite(z, "z");
            return z;
        case Family::YeoJohnson:
            return yj_inverse(params[0], z);
        case Family::SinhArcsinh:
            return sas_inverse(params[0], params[1], z);
    }
    throw std::logic_error("unknown family");
}

bool TransformSpec::in_range(double z) const {
    if (!std::isfinite(z)) {
        return false;
    }
    if (family == Family::YeoJohnson) {
        return z == 0.0 || yj_range(params[0]).contains(z);
    }
    return true;
}

std::string TransformSpec::name() const {
    switch (family) {
        case Family::Identity:
            return "identity";
        case Family::YeoJohnson:
            return "yeo-johnson";
        case Family::SinhArcsinh:
            return "sinh-arcsinh";
    }
    return "?";
}

}  // namespace tbr
