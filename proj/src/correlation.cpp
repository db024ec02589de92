#include "tbr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tbr {

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        throw std::invalid_argument("correlations: constant input sequence");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> midranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
        i = j + 1;
    }
    return rank;
}

double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double n0x = static_cast<double>(concordant + discordant + ties_x);
    const double n0y = static_cast<double>(concordant + discordant + ties_y);
    if (n0x <= 0.0 || n0y <= 0.0) {
        throw std::invalid_argument("correlations: constant input sequence");
    }
    return static_cast<double>(concordant - discordant) / std::sqrt(n0x * n0y);
}

}  // namespace

CorrelationTriple correlations(const std::vector<double>& x,
                               const std::vector<double>& r) {
    if (x.size() != r.size()) {
        throw std::invalid_argument("correlations: length mismatch");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("correlations: need at least two points");
    }
    CorrelationTriple out{};
    out.pearson = pearson(x, r);
    out.kendall = kendall_tau_b(x, r);
    out.spearman = pearson(midranks(x), midranks(r));
    return out;
}

}  // namespace tbr
