#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tbr/correlation.hpp"
#include "tbr/criterion.hpp"
#include "tbr/simgen.hpp"

namespace tbr {

struct McConfig {
    int model = 1;                       // simulation model 1..4
    std::vector<std::size_t> ns = {50, 100};
    std::vector<double> theta0s = {0.0, 0.5, 1.0, 1.5, 2.0};
    std::size_t reps = 1000;
    std::vector<Criterion> criteria = {Criterion::TKS, Criterion::TCM,
                                       Criterion::TKSCM, Criterion::TCMKS};
    double a_divisor = 2.0;              // a = b / a_divisor, b = n^{-1/3}
    double theta_min = -0.5;
    double theta_max = 2.5;
    std::size_t y_grid_size = 100;
    Design design = Design::Fixed;
    std::uint64_t master_seed = 42;
    std::size_t threads = 1;

    void validate() const;
};

struct McCell {
    int model;
    std::size_t n;
    double a_divisor;
    Criterion criterion;
    double theta0;
    double mean;
    double median;
    double mise;  // mean squared error of theta_hat across replications
    std::size_t reps_used;
    std::size_t failures;
    bool valid;   // false when more than 5% of replications failed
};

struct McSummary {
    std::vector<McCell> cells;

    const McCell* find(std::size_t n, double theta0, Criterion c) const;
};

// Runs reps replications per (n, theta0) cell; every criterion is estimated
// on the same datasets. Replications use independent derived seeds and may
// run on several threads; aggregation order is fixed by replication index.
McSummary run_mc(const McConfig& config);

// One row per cell: model,n,a_rule,criterion,theta0,mean,median,mise,failures
void write_summary_csv(const McSummary& summary, std::ostream& out);

struct CorrelationRow {
    std::string label;  // "original", "true", "TKS", ...
    CorrelationTriple avg;
};

struct CorrelationStudy {
    std::vector<CorrelationRow> rows;
    std::size_t reps;
    std::size_t failures;
};

// Average covariate/error correlations over replications: for the original
// data (identity transform), the true parameter, and each estimator.
CorrelationStudy run_correlation_study(int model, std::size_t n, double theta0,
                                       std::size_t reps, double a_divisor,
                                       std::uint64_t master_seed,
                                       std::size_t threads);

}  // namespace tbr
