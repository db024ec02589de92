#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tbr/criterion.hpp"
#include "tbr/dataset.hpp"
#include "tbr/rng.hpp"

using namespace tbr;

namespace {

// Independent double-loop reference for the criterion process: evaluates the
// empirical-cdf factor with an inner loop for every i. Shares only the final
// division by n^2 with the implementation, so equal integer numerators give
// bit-identical results.
double gn_brute_force(const std::vector<double>& r, const std::vector<double>& xs,
                      double y, double s) {
    const long long n = static_cast<long long>(r.size());
    long long num = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] <= y)) continue;
        long long count_le = 0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (xs[j] <= s) ++count_le;
        }
        num += (xs[i] <= s ? n : 0) - count_le;
    }
    return static_cast<double>(num) / static_cast<double>(n * n);
}

}  // namespace

TEST_CASE("gn_eval hand examples") {
    const std::vector<double> r = {-1.0, -2.0};
    const std::vector<double> xs = {0.25, 0.75};
    CHECK(gn_eval(r, xs, -1.5, 0.5) == -0.25);
    // y above every residual: zero for any s
    CHECK(gn_eval(r, xs, 0.0, 0.5) == 0.0);
    CHECK(gn_eval(r, xs, -0.5, 0.3) == 0.0);
    // s = 1 covers every covariate: zero for any y
    CHECK(gn_eval(r, xs, -1.5, 1.0) == 0.0);
    CHECK(gn_eval(r, xs, -5.0, 1.0) == 0.0);
    CHECK_THROWS(gn_eval({}, {}, 0.0, 0.0));
}

TEST_CASE("gn_eval matches the brute-force double loop bit-exactly") {
    Rng rng(314159);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 6;
        std::vector<double> r(n), xs(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = -3.0 * rng.uniform();
            xs[i] = rng.uniform();
        }
        const double y = -3.5 + 4.0 * rng.uniform();
        const double s = -0.1 + 1.2 * rng.uniform();
        CHECK(gn_eval(r, xs, y, s) == gn_brute_force(r, xs, y, s));
    }
}

TEST_CASE("empirical cdf of the covariates") {
    const Dataset data({{0.25, 1.0}, {0.75, 2.0}}, Design::Random);
    CHECK(data.empirical_cdf_x(1.0) == 1.0);
    CHECK(data.empirical_cdf_x(0.1) == 0.0);
    CHECK(data.empirical_cdf_x(0.5) == 0.5);
    CHECK(data.empirical_cdf_x(0.25) == 0.5);
}

TEST_CASE("surface zero boundaries are exact and entries bounded") {
    Rng rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng.next_u64() % 40;
        std::vector<double> r(n), xs(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = -2.0 * rng.uniform();
            xs[i] = rng.uniform();
        }
        std::sort(xs.begin(), xs.end());
        const CriterionSurface surf = build_surface(r, xs, 40);
        REQUIRE_FALSE(surf.degenerate);
        // top rows of the grid lie above every residual
        const auto& last_row = surf.values.back();
        for (double v : last_row) CHECK(v == 0.0);
        // last column is s = max x
        for (const auto& row : surf.values) {
            CHECK(row.back() == 0.0);
            for (double v : row) {
                CHECK(v >= -1.0);
                CHECK(v <= 1.0);
            }
        }
        // surface entries agree with gn_eval up to the final rounding
        for (int probe = 0; probe < 5; ++probe) {
            const std::size_t j = rng.next_u64() % surf.y_grid.size();
            const std::size_t k = rng.next_u64() % n;
            CHECK(surf.values[j][k] ==
                  doctest::Approx(gn_eval(r, xs, surf.y_grid[j], xs[k]))
                      .epsilon(1e-14));
        }
    }
}

TEST_CASE("degenerate residuals give a flagged zero criterion") {
    const std::vector<double> r = {-1.0, -1.0, -1.0};
    const std::vector<double> xs = {0.2, 0.5, 0.8};
    const CriterionSurface surf = build_surface(r, xs, 10);
    CHECK(surf.degenerate);
    for (Criterion c : {Criterion::TKS, Criterion::TCM, Criterion::TKSCM,
                        Criterion::TCMKS}) {
        CHECK(surface_norm(surf, c) == 0.0);
    }
}

TEST_CASE("semi-norm ordering on a common surface") {
    Rng rng(555);
    std::vector<double> r(30), xs(30);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = -rng.uniform();
        xs[i] = rng.uniform();
    }
    std::sort(xs.begin(), xs.end());
    const CriterionSurface surf = build_surface(r, xs, 50);
    const double tks = surface_norm(surf, Criterion::TKS);
    const double tcm = surface_norm(surf, Criterion::TCM);
    const double tkscm = surface_norm(surf, Criterion::TKSCM);
    const double tcmks = surface_norm(surf, Criterion::TCMKS);
    CHECK(tks >= tkscm);
    CHECK(tkscm >= 0.0);
    CHECK(tks >= tcmks);
    CHECK(tkscm >= tcm - 1e-15);
    CHECK(tcmks >= tcm - 1e-15);
    CHECK(tcm > 0.0);
}

TEST_CASE("hand surface contains the expected extreme entry") {
    // two points: residuals (-1, -2) at x = (0.25, 0.75)
    const std::vector<double> r = {-1.0, -2.0};
    const std::vector<double> xs = {0.25, 0.75};
    const CriterionSurface surf = build_surface(r, xs, 100);
    const double tks = surface_norm(surf, Criterion::TKS);
    CHECK(tks >= 0.25);
}
