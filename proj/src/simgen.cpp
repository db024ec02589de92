#include "tbr/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tbr {

double regression_value(RegressionKind kind, double x) {
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("regression_value: x outside [0,1]");
    }
    switch (kind) {
        case RegressionKind::Parabola:
            return 10.0 * (x - 0.5) * (x - 0.5);
        case RegressionKind::SineLinear:
            return 0.5 * std::sin(2.0 * std::numbers::pi * x) + 4.0 * x;
    }
    throw std::logic_error("unknown regression kind");
}

namespace {

double draw_error(ErrorKind kind, Rng& rng) {
    const double u = rng.uniform();
    switch (kind) {
        case ErrorKind::WeibullNeg:
            return -std::cbrt(-std::log(u));
        case ErrorKind::ExpNeg:
            return std::log(u) / 3.0;
    }
    throw std::logic_error("unknown error kind");
}

}  // namespace

std::vector<double> sample_errors(ErrorKind kind, std::size_t n, Rng& rng) {
    if (n == 0) {
        throw std::invalid_argument("sample_errors: n must be positive");
    }
    std::vector<double> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = draw_error(kind, rng);
    return eps;
}

void ScenarioSpec::validate() const {
    if (n < 2) {
        throw std::invalid_argument("ScenarioSpec: n must be >= 2");
    }
    if (!(theta0 >= -0.5 && theta0 <= 2.5)) {
        throw std::invalid_argument("ScenarioSpec: theta0 outside [-0.5, 2.5]");
    }
}

ScenarioSpec ScenarioSpec::model(int id, double theta0, std::size_t n,
                                 Design design, std::uint64_t seed) {
    ScenarioSpec spec;
    switch (id) {
        case 1:
            spec.regression = RegressionKind::Parabola;
            spec.error = ErrorKind::WeibullNeg;
            break;
        case 2:
            spec.regression = RegressionKind::Parabola;
            spec.error = ErrorKind::ExpNeg;
            break;
        case 3:
            spec.regression = RegressionKind::SineLinear;
            spec.error = ErrorKind::WeibullNeg;
            break;
        case 4:
            spec.regression = RegressionKind::SineLinear;
            spec.error = ErrorKind::ExpNeg;
            break;
        default:
            throw std::invalid_argument("ScenarioSpec: model id must be 1..4");
    }
    spec.theta0 = theta0;
    spec.n = n;
    spec.design = design;
    spec.seed = seed;
    return spec;
}

Dataset make_dataset(const ScenarioSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t n = spec.n;

    std::vector<double> xs(n);
    if (spec.design == Design::Fixed) {
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) xs[i] = rng.uniform();
        std::sort(xs.begin(), xs.end());
    }

    const TransformSpec transform = TransformSpec::yeo_johnson(spec.theta0);
    std::vector<Sample> samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = regression_value(spec.regression, xs[i]);
        double z = h + draw_error(spec.error, rng);
        int attempts = 0;
        while (!transform.in_range(z)) {
            if (++attempts > 100) {
                throw std::runtime_error(
                    "make_dataset: h_0(x)+eps outside the transform range after "
                    "100 redraws at index " + std::to_string(i));
            }
            z = h + draw_error(spec.error, rng);
        }
        samples[i] = {xs[i], transform.inverse(z)};
    }
    return Dataset(std::move(samples), spec.design);
}

}  // namespace tbr
