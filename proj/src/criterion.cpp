#include "tbr/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbr {

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::TKS: return "TKS";
        case Criterion::TCM: return "TCM";
        case Criterion::TKSCM: return "TKSCM";
        case Criterion::TCMKS: return "TCMKS";
    }
    return "?";
}

Criterion criterion_from_name(const std::string& name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(c)));
    if (up == "TKS") return Criterion::TKS;
    if (up == "TCM") return Criterion::TCM;
    if (up == "TKSCM") return Criterion::TKSCM;
    if (up == "TCMKS") return Criterion::TCMKS;
    throw std::invalid_argument("unknown criterion: " + name);
}

void CriterionSpec::validate() const {
    if (y_grid_size < 2) {
        throw std::invalid_argument("CriterionSpec: y_grid_size must be >= 2");
    }
}

std::vector<double> residuals(const Dataset& data, const TransformSpec& transform,
                              const SmoothedBoundary& fit) {
    if (fit.knot_values().size() != data.size()) {
        throw std::invalid_argument("residuals: fit/data size mismatch");
    }
    std::vector<double> r(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        r[i] = transform.forward(data[i].y) - fit.knot_values()[i];
    }
    return r;
}

std::vector<double> residuals_raw(const Dataset& data,
                                  const TransformSpec& transform,
                                  const BoundaryFit& fit) {
    if (fit.raw_values().size() != data.size()) {
        throw std::invalid_argument("residuals_raw: fit/data size mismatch");
    }
    std::vector<double> r(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        r[i] = transform.forward(data[i].y) - fit.raw_values()[i];
    }
    return r;
}

double gn_eval(const std::vector<double>& residuals,
               const std::vector<double>& xs, double y, double s) {
    const std::size_t n = residuals.size();
    if (n == 0 || xs.size() != n) {
        throw std::invalid_argument("gn_eval: empty input or length mismatch");
    }
    long long joint = 0, c_y = 0, c_s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool ry = residuals[i] <= y;
        const bool xc = xs[i] <= s;
        joint += (ry && xc) ? 1 : 0;
        c_y += ry ? 1 : 0;
        c_s += xc ? 1 : 0;
    }
    const long long nn = static_cast<long long>(n);
    return static_cast<double>(nn * joint - c_y * c_s) /
           static_cast<double>(nn * nn);
}

CriterionSurface build_surface(const std::vector<double>& residuals,
                               const std::vector<double>& xs,
                               std::size_t y_grid_size) {
    const std::size_t n = residuals.size();
    if (n == 0 || xs.size() != n) {
        throw std::invalid_argument("build_surface: empty input or length mismatch");
    }
    if (y_grid_size < 2) {
        throw std::invalid_argument("build_surface: y_grid_size must be >= 2");
    }
    CriterionSurface surf;
    surf.s_grid = xs;

    const auto [min_it, max_it] = std::minmax_element(residuals.begin(), residuals.end());
    const double r_min = *min_it, r_max = *max_it;
    if (r_max - r_min <= 0.0) {
        surf.degenerate = true;
        surf.y_grid.assign(y_grid_size, r_min);
        surf.values.assign(y_grid_size, std::vector<double>(n, 0.0));
        return surf;
    }
    // Grid at residual order statistics (quantiles when n exceeds the grid
    // size), i.e. integration in y against the empirical residual measure.
    // An equispaced grid would weight criteria by the residual spread, which
    // changes with theta and biases the minimization. The last grid point is
    // the max residual, making the top row exactly zero.
    surf.y_span = r_max - r_min;
    std::vector<double> sorted = residuals;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = std::min(y_grid_size, n);
    surf.y_grid.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        surf.y_grid[j] = sorted[(j + 1) * n / m - 1];
    }

    // Per y-row: indicator prefix sums over the x-ordered sample give all
    // G_n(y, x_k) in O(n). Same integer-count formula as gn_eval.
    const long long nn = static_cast<long long>(n);
    const double inv_n2 = 1.0 / static_cast<double>(nn * nn);
    surf.values.assign(m, std::vector<double>(n));
    for (std::size_t j = 0; j < m; ++j) {
        const double y = surf.y_grid[j];
        long long c_y = 0;
        long long prefix = 0;
        std::vector<double>& row = surf.values[j];
        for (std::size_t i = 0; i < n; ++i) {
            c_y += residuals[i] <= y ? 1 : 0;
        }
        // Covariates can tie; each block of equal x shares one G_n value.
        std::size_t i = 0;
        while (i < n) {
            std::size_t end = i;
            while (end + 1 < n && xs[end + 1] == xs[i]) ++end;
            for (std::size_t t = i; t <= end; ++t) {
                prefix += residuals[t] <= y ? 1 : 0;
            }
            const double g =
                static_cast<double>(nn * prefix -
                                    c_y * static_cast<long long>(end + 1)) *
                inv_n2;
            for (std::size_t t = i; t <= end; ++t) row[t] = g;
            i = end + 1;
        }
    }
    return surf;
}

double surface_norm(const CriterionSurface& surface, Criterion kind) {
    if (surface.degenerate) return 0.0;
    const std::size_t ny = surface.y_grid.size();
    const std::size_t ns = surface.s_grid.size();
    switch (kind) {
        case Criterion::TKS: {
            double m = 0.0;
            for (const auto& row : surface.values)
                for (double v : row) m = std::max(m, std::abs(v));
            return m;
        }
        case Criterion::TCM: {
            double acc = 0.0;
            for (const auto& row : surface.values)
                for (double v : row) acc += v * v;
            return std::sqrt(acc / static_cast<double>(ny * ns));
        }
        case Criterion::TKSCM: {
            double m = 0.0;
            for (std::size_t k = 0; k < ns; ++k) {
                double acc = 0.0;
                for (std::size_t j = 0; j < ny; ++j) {
                    const double v = surface.values[j][k];
                    acc += v * v;
                }
                m = std::max(m, acc);
            }
            return std::sqrt(m / static_cast<double>(ny));
        }
        case Criterion::TCMKS: {
            double m = 0.0;
            for (const auto& row : surface.values) {
                double acc = 0.0;
                for (double v : row) acc += v * v;
                m = std::max(m, acc);
            }
            return std::sqrt(m / static_cast<double>(ns));
        }
    }
    throw std::logic_error("unknown criterion");
}

double mn(const Dataset& data, const TransformSpec& transform,
          const SmoothedBoundary& fit, const CriterionSpec& spec) {
    spec.validate();
    const std::vector<double> r = residuals(data, transform, fit);
    const CriterionSurface surf = build_surface(r, data.xs(), spec.y_grid_size);
    return surface_norm(surf, spec.kind);
}

}  // namespace tbr
