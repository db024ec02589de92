#include "tbr/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "tbr/minimize.hpp"

namespace tbr {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::uint64_t cell_seed(std::uint64_t master, int model, std::size_t n,
                        double theta0) {
    std::uint64_t s = derive_seed(master, static_cast<std::uint64_t>(model));
    s = derive_seed(s, static_cast<std::uint64_t>(n));
    return derive_seed(s, std::bit_cast<std::uint64_t>(theta0));
}

// Runs fn(rep) for rep in [0, reps) on up to `threads` workers. Results must
// be written into per-rep slots by the callers, so the aggregation that
// follows is independent of the thread count.
template <typename Fn>
void parallel_reps(std::size_t reps, std::size_t threads, Fn fn) {
    threads = std::max<std::size_t>(1, std::min(threads, reps));
    if (threads == 1) {
        for (std::size_t r = 0; r < reps; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t r = t; r < reps; r += threads) fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void McConfig::validate() const {
    if (model < 1 || model > 4) {
        throw std::invalid_argument("McConfig: model must be 1..4");
    }
    if (reps < 1) throw std::invalid_argument("McConfig: reps must be >= 1");
    if (criteria.empty()) {
        throw std::invalid_argument("McConfig: criteria must be nonempty");
    }
    if (ns.empty() || theta0s.empty()) {
        throw std::invalid_argument("McConfig: empty n or theta0 list");
    }
    if (!(a_divisor > 0.0)) {
        throw std::invalid_argument("McConfig: a_divisor must be positive");
    }
    if (!(theta_min <= theta_max)) {
        throw std::invalid_argument("McConfig: empty theta box");
    }
}

const McCell* McSummary::find(std::size_t n, double theta0, Criterion c) const {
    for (const McCell& cell : cells) {
        if (cell.n == n && cell.theta0 == theta0 && cell.criterion == c) {
            return &cell;
        }
    }
    return nullptr;
}

McSummary run_mc(const McConfig& config) {
    config.validate();
    McSummary summary;
    const std::size_t nc = config.criteria.size();
    std::vector<CriterionSpec> specs(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        specs[k] = {config.criteria[k], config.y_grid_size};
    }
    const ThetaBox box = ThetaBox::scalar(config.theta_min, config.theta_max);

    for (std::size_t n : config.ns) {
        for (double theta0 : config.theta0s) {
            const std::uint64_t cs =
                cell_seed(config.master_seed, config.model, n, theta0);
            const Bandwidths bw = Bandwidths::default_rule(n, config.a_divisor);

            // theta_hat per (rep, criterion); NaN marks a failed replication.
            std::vector<std::vector<double>> estimates(
                config.reps, std::vector<double>(nc, kNan));
            parallel_reps(config.reps, config.threads, [&](std::size_t rep) {
                try {
                    const ScenarioSpec scen = ScenarioSpec::model(
                        config.model, theta0, n, config.design,
                        derive_seed(cs, rep));
                    const Dataset data = make_dataset(scen);
                    const auto fits = minimize_theta_multi(
                        data, Family::YeoJohnson, box, bw, specs);
                    for (std::size_t k = 0; k < nc; ++k) {
                        estimates[rep][k] = fits[k].theta_hat[0];
                    }
                } catch (const std::exception&) {
                    // slot keeps NaN; counted below
                }
            });

            for (std::size_t k = 0; k < nc; ++k) {
                std::vector<double> ok;
                ok.reserve(config.reps);
                for (std::size_t rep = 0; rep < config.reps; ++rep) {
                    if (!std::isnan(estimates[rep][k])) {
                        ok.push_back(estimates[rep][k]);
                    }
                }
                McCell cell{};
                cell.model = config.model;
                cell.n = n;
                cell.a_divisor = config.a_divisor;
                cell.criterion = config.criteria[k];
                cell.theta0 = theta0;
                cell.reps_used = ok.size();
                cell.failures = config.reps - ok.size();
                cell.valid = cell.failures * 20 <= config.reps;  // <= 5%
                if (ok.empty()) {
                    cell.mean = cell.median = cell.mise = kNan;
                    cell.valid = false;
                } else {
                    double sum = 0.0, sq = 0.0;
                    for (double t : ok) {
                        sum += t;
                        sq += (t - theta0) * (t - theta0);
                    }
                    cell.mean = sum / static_cast<double>(ok.size());
                    cell.median = median_of(ok);
                    cell.mise = sq / static_cast<double>(ok.size());
                }
                summary.cells.push_back(cell);
            }
        }
    }
    return summary;
}

void write_summary_csv(const McSummary& summary, std::ostream& out) {
    out << "model,n,a_rule,criterion,theta0,mean,median,mise,failures\n";
    char buf[256];
    for (const McCell& c : summary.cells) {
        std::snprintf(buf, sizeof(buf),
                      "%d,%zu,b/%.17g,%s,%.17g,%.17g,%.17g,%.17g,%zu\n", c.model,
                      c.n, c.a_divisor, criterion_name(c.criterion), c.theta0,
                      c.mean, c.median, c.mise, c.failures);
        out << buf;
    }
}

CorrelationStudy run_correlation_study(int model, std::size_t n, double theta0,
                                       std::size_t reps, double a_divisor,
                                       std::uint64_t master_seed,
                                       std::size_t threads) {
    if (reps < 1) {
        throw std::invalid_argument("run_correlation_study: reps must be >= 1");
    }
    const std::vector<Criterion> crits = {Criterion::TKS, Criterion::TCM,
                                          Criterion::TKSCM, Criterion::TCMKS};
    std::vector<CriterionSpec> specs;
    for (Criterion c : crits) specs.push_back({c, 100});
    const ThetaBox box = ThetaBox::scalar(-0.5, 2.5);
    const Bandwidths bw = Bandwidths::default_rule(n, a_divisor);
    const std::uint64_t cs = cell_seed(master_seed, model, n, theta0);

    // Rows: original data, true parameter, then one per estimator.
    constexpr std::size_t kRows = 6;
    std::vector<std::vector<CorrelationTriple>> results(
        reps, std::vector<CorrelationTriple>(kRows));
    std::vector<char> failed(reps, 0);

    const TransformSpec truth = TransformSpec::yeo_johnson(theta0);

    parallel_reps(reps, threads, [&](std::size_t rep) {
        try {
            const ScenarioSpec scen = ScenarioSpec::model(
                model, theta0, n, Design::Fixed, derive_seed(cs, rep));
            const Dataset data = make_dataset(scen);
            const std::vector<double> xs = data.xs();

            // Errors under a candidate transform, taken against the true
            // boundary mapped through that transform: for theta0 these are
            // the simulated errors themselves. Using an estimated boundary
            // instead would fold its bias into every row.
            auto errors_for = [&](const TransformSpec& tf) {
                std::vector<double> e(data.size());
                for (std::size_t i = 0; i < data.size(); ++i) {
                    const double frontier = truth.inverse(
                        regression_value(scen.regression, data[i].x));
                    e[i] = tf.forward(data[i].y) - tf.forward(frontier);
                }
                return e;
            };

            results[rep][0] = correlations(xs, errors_for(TransformSpec::identity()));
            results[rep][1] = correlations(xs, errors_for(truth));
            const auto fits =
                minimize_theta_multi(data, Family::YeoJohnson, box, bw, specs);
            for (std::size_t k = 0; k < crits.size(); ++k) {
                results[rep][2 + k] = correlations(
                    xs, errors_for(TransformSpec::yeo_johnson(fits[k].theta_hat[0])));
            }
        } catch (const std::exception&) {
            failed[rep] = 1;
        }
    });

    CorrelationStudy study;
    study.reps = reps;
    study.failures = 0;
    const char* labels[kRows] = {"original", "true",  "TKS",
                                 "TCM",      "TKSCM", "TCMKS"};
    std::vector<CorrelationTriple> acc(kRows, CorrelationTriple{0, 0, 0});
    std::size_t used = 0;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        if (failed[rep]) {
            ++study.failures;
            continue;
        }
        ++used;
        for (std::size_t row = 0; row < kRows; ++row) {
            acc[row].pearson += results[rep][row].pearson;
            acc[row].kendall += results[rep][row].kendall;
            acc[row].spearman += results[rep][row].spearman;
        }
    }
    if (used == 0) {
        throw std::runtime_error("run_correlation_study: every replication failed");
    }
    for (std::size_t row = 0; row < kRows; ++row) {
        study.rows.push_back(
            {labels[row],
             {acc[row].pearson / used, acc[row].kendall / used,
              acc[row].spearman / used}});
    }
    return study;
}

}  // namespace tbr
