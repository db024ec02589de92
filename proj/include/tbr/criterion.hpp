#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tbr/boundary.hpp"
#include "tbr/dataset.hpp"
#include "tbr/transform.hpp"

namespace tbr {

// Semi-norms applied to the criterion process:
//   TKS   sup over the whole grid of |G_n|
//   TCM   root-mean-square over the whole grid
//   TKSCM sup over s of the RMS over y
//   TCMKS sup over y of the RMS over s
enum class Criterion { TKS, TCM, TKSCM, TCMKS };

const char* criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);

struct CriterionSpec {
    Criterion kind = Criterion::TCM;
    std::size_t y_grid_size = 100;

    void validate() const;
};

// Residuals r_i = Lambda_theta(Y_i) - hhat(x_i), dataset order.
std::vector<double> residuals(const Dataset& data, const TransformSpec& transform,
                              const SmoothedBoundary& fit);
std::vector<double> residuals_raw(const Dataset& data,
                                  const TransformSpec& transform,
                                  const BoundaryFit& fit);

// One point of the criterion process,
//   G_n(y, s) = (1/n) sum_i I{r_i <= y} (I{x_i <= s} - Fhat_X(s)).
// Evaluated through integer counts as (n A - c_y c_s) / n^2, which makes the
// zero rows/columns (y >= max r, s >= max x, s < min x) exactly 0.
double gn_eval(const std::vector<double>& residuals,
               const std::vector<double>& xs, double y, double s);

// G_n evaluated on a y-grid times the observed covariates (the process is a
// step function in s with jumps only at data points).
struct CriterionSurface {
    std::vector<double> y_grid;           // ascending
    std::vector<double> s_grid;           // the covariates, ascending
    std::vector<std::vector<double>> values;  // [y][s]
    bool degenerate = false;              // all residuals equal
    double y_span = 0.0;                  // grid span, kept for diagnostics
};

CriterionSurface build_surface(const std::vector<double>& residuals,
                               const std::vector<double>& xs,
                               std::size_t y_grid_size);

double surface_norm(const CriterionSurface& surface, Criterion kind);

// M_n for one transform: builds the surface from the smoothed-fit residuals
// and applies the semi-norm. Degenerate residuals give 0.
double mn(const Dataset& data, const TransformSpec& transform,
          const SmoothedBoundary& fit, const CriterionSpec& spec);

}  // namespace tbr
