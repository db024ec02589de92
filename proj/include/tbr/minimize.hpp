#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tbr/criterion.hpp"
#include "tbr/dataset.hpp"
#include "tbr/transform.hpp"

namespace tbr {

struct Bandwidths {
    double b;  // local-constant window
    double a;  // smoothing bandwidth

    static Bandwidths default_rule(std::size_t n, double a_divisor = 2.0);
};

// Per-dimension search interval; lo == hi pins the coordinate.
struct ThetaBox {
    std::vector<std::pair<double, double>> dims;

    static ThetaBox scalar(double lo, double hi) { return {{{lo, hi}}}; }
};

struct ThetaEstimate {
    std::vector<double> theta_hat;
    double criterion_value = 0.0;
    std::size_t evaluations = 0;
    std::vector<std::pair<std::vector<double>, double>> search_trace;  // optional
};

struct MinimizeOptions {
    std::size_t coarse_points = 61;  // per dimension (scalar); 21 for 2-d
    std::size_t refine_rounds = 2;
    std::size_t refine_points = 21;  // per dimension (scalar); 7 for 2-d
    double zoom = 5.0;
    bool use_raw_fit = false;  // residuals from the unsmoothed estimator
    bool keep_trace = false;
};

// Arg-min of M_n over the box: coarse equispaced grid, then nested zoomed
// grids around the incumbent. Ties break toward lexicographically smallest
// theta. The boundary fit is recomputed for every candidate.
ThetaEstimate minimize_theta(const Dataset& data, Family family,
                             const ThetaBox& box, const Bandwidths& bw,
                             const CriterionSpec& spec,
                             const MinimizeOptions& opts = {});

// Same search run for several criteria at once; the coarse-grid surface is
// built once per candidate theta and every semi-norm read off it.
std::vector<ThetaEstimate> minimize_theta_multi(
    const Dataset& data, Family family, const ThetaBox& box,
    const Bandwidths& bw, const std::vector<CriterionSpec>& specs,
    const MinimizeOptions& opts = {});

}  // namespace tbr
