#include "tbr/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tbr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TransformSpec make_spec(Family family, const std::vector<double>& theta) {
    TransformSpec spec;
    spec.family = family;
    spec.params = theta;
    return spec;
}

// One criterion-pipeline pass: transform, boundary fit, residuals, surface.
// Returns the norms for the requested kinds, or nullopt when the candidate
// produces non-finite transformed responses.
std::optional<std::vector<double>> evaluate_candidate(
    const Dataset& data, Family family, const std::vector<double>& theta,
    const Bandwidths& bw, const std::vector<CriterionSpec>& specs,
    bool use_raw_fit) {
    TransformSpec spec = make_spec(family, theta);
    try {
        spec.validate();
        for (const Sample& s : data.samples()) {
            if (!std::isfinite(spec.forward(s.y))) return std::nullopt;
        }
        BoundaryFit fit(data, spec, bw.b);
        std::vector<double> r;
        if (use_raw_fit) {
            r = residuals_raw(data, spec, fit);
        } else {
            SmoothedBoundary smooth(fit, bw.a);
            r = residuals(data, spec, smooth);
        }
        const CriterionSurface surf =
            build_surface(r, data.xs(), specs.front().y_grid_size);
        std::vector<double> out(specs.size());
        for (std::size_t k = 0; k < specs.size(); ++k) {
            out[k] = surface_norm(surf, specs[k].kind);
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<double> axis_grid(double lo, double hi, std::size_t points) {
    if (hi <= lo) return {lo};
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(points - 1);
    }
    return g;
}

// Cartesian product in lexicographic order.
std::vector<std::vector<double>> product_grid(
    const std::vector<std::vector<double>>& axes) {
    std::vector<std::vector<double>> out{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<double>> next;
        next.reserve(out.size() * axis.size());
        for (const auto& prefix : out) {
            for (double v : axis) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

struct Incumbent {
    std::vector<double> theta;
    double value = kInf;

    void offer(const std::vector<double>& t, double v) {
        if (v < value || (v == value && !theta.empty() && lex_less(t, theta))) {
            theta = t;
            value = v;
        } else if (theta.empty() && std::isfinite(v)) {
            theta = t;
            value = v;
        }
    }
};

}  // namespace

Bandwidths Bandwidths::default_rule(std::size_t n, double a_divisor) {
    const double b = std::pow(static_cast<double>(n), -1.0 / 3.0);
    return {b, b / a_divisor};
}

std::vector<ThetaEstimate> minimize_theta_multi(
    const Dataset& data, Family family, const ThetaBox& box,
    const Bandwidths& bw, const std::vector<CriterionSpec>& specs,
    const MinimizeOptions& opts) {
    if (specs.empty()) {
        throw std::invalid_argument("minimize_theta_multi: no criteria");
    }
    for (const CriterionSpec& s : specs) {
        s.validate();
        if (s.y_grid_size != specs.front().y_grid_size) {
            throw std::invalid_argument(
                "minimize_theta_multi: criteria must share a y-grid size");
        }
    }
    const std::size_t d = box.dims.size();
    if (d == 0) {
        throw std::invalid_argument("minimize_theta_multi: empty theta box");
    }
    for (const auto& [lo, hi] : box.dims) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || hi < lo) {
            throw std::invalid_argument("minimize_theta_multi: bad theta box");
        }
    }

    // Multi-dimensional boxes get smaller per-axis grids.
    const std::size_t coarse_pts = d == 1 ? opts.coarse_points : 21;
    const std::size_t refine_pts = d == 1 ? opts.refine_points : 7;

    std::vector<std::vector<double>> axes(d);
    for (std::size_t k = 0; k < d; ++k) {
        axes[k] = axis_grid(box.dims[k].first, box.dims[k].second, coarse_pts);
    }
    const auto coarse = product_grid(axes);

    std::vector<ThetaEstimate> results(specs.size());
    std::vector<Incumbent> best(specs.size());
    std::size_t shared_evals = 0;
    for (const auto& theta : coarse) {
        ++shared_evals;
        const auto norms =
            evaluate_candidate(data, family, theta, bw, specs, opts.use_raw_fit);
        for (std::size_t k = 0; k < specs.size(); ++k) {
            const double v = norms ? (*norms)[k] : kInf;
            best[k].offer(theta, v);
            if (opts.keep_trace) results[k].search_trace.emplace_back(theta, v);
        }
    }
    for (std::size_t k = 0; k < specs.size(); ++k) {
        if (!std::isfinite(best[k].value)) {
            throw std::runtime_error(
                "minimize_theta: every candidate in the coarse grid failed");
        }
    }

    // Nested refinement around each criterion's incumbent.
    for (std::size_t k = 0; k < specs.size(); ++k) {
        results[k].evaluations = shared_evals;
        std::vector<double> width(d);
        for (std::size_t j = 0; j < d; ++j) {
            width[j] = box.dims[j].second - box.dims[j].first;
        }
        const std::vector<CriterionSpec> one{specs[k]};
        for (std::size_t round = 0; round < opts.refine_rounds; ++round) {
            for (std::size_t j = 0; j < d; ++j) width[j] /= opts.zoom;
            std::vector<std::vector<double>> raxes(d);
            for (std::size_t j = 0; j < d; ++j) {
                if (width[j] <= 0.0) {
                    raxes[j] = {best[k].theta[j]};
                    continue;
                }
                const double lo = std::max(box.dims[j].first,
                                           best[k].theta[j] - width[j] / 2.0);
                const double hi = std::min(box.dims[j].second,
                                           best[k].theta[j] + width[j] / 2.0);
                raxes[j] = axis_grid(lo, hi, refine_pts);
            }
            for (const auto& theta : product_grid(raxes)) {
                ++results[k].evaluations;
                const auto norms = evaluate_candidate(data, family, theta, bw,
                                                      one, opts.use_raw_fit);
                const double v = norms ? (*norms)[0] : kInf;
                best[k].offer(theta, v);
                if (opts.keep_trace) results[k].search_trace.emplace_back(theta, v);
            }
        }
        results[k].theta_hat = best[k].theta;
        results[k].criterion_value = best[k].value;
    }
    return results;
}

ThetaEstimate minimize_theta(const Dataset& data, Family family,
                             const ThetaBox& box, const Bandwidths& bw,
                             const CriterionSpec& spec,
                             const MinimizeOptions& opts) {
    return minimize_theta_multi(data, family, box, bw, {spec}, opts).front();
}

}  // namespace tbr
