#pragma once

#include <cstdint>
#include <vector>

#include "tbr/dataset.hpp"
#include "tbr/rng.hpp"
#include "tbr/transform.hpp"

namespace tbr {

enum class RegressionKind { Parabola, SineLinear };
enum class ErrorKind { WeibullNeg, ExpNeg };

// Boundary curves of the simulation study:
//   Parabola    10 (x - 1/2)^2
//   SineLinear  sin(2 pi x)/2 + 4 x
double regression_value(RegressionKind kind, double x);

// Nonpositive one-sided errors: -eps ~ Weibull(scale 1, shape 3) or
// -eps ~ Exp(rate 3).
std::vector<double> sample_errors(ErrorKind kind, std::size_t n, Rng& rng);

struct ScenarioSpec {
    RegressionKind regression = RegressionKind::Parabola;
    ErrorKind error = ErrorKind::WeibullNeg;
    double theta0 = 1.0;
    std::size_t n = 100;
    Design design = Design::Fixed;
    std::uint64_t seed = 42;

    void validate() const;

    // The four simulation models by number: 1 parabola/weibull,
    // 2 parabola/exp, 3 sine/weibull, 4 sine/exp.
    static ScenarioSpec model(int id, double theta0, std::size_t n,
                              Design design, std::uint64_t seed);
};

// Y_i = Lambda_{theta0}^{-1}(h_0(x_i) + eps_i). Fixed design places
// x_i = i/(n+1); random design draws Uniform[0,1] covariates and sorts.
// Identical spec (including seed) gives an identical dataset.
Dataset make_dataset(const ScenarioSpec& spec);

}  // namespace tbr
