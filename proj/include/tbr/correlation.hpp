#pragma once

#include <vector>

namespace tbr {

struct CorrelationTriple {
    double pearson;
    double kendall;  // tau-b, ties handled in the denominators
    double spearman; // Pearson on mid-ranks
};

// Throws std::invalid_argument on length mismatch, n < 2, or a constant
// input sequence (the coefficients are undefined there).
CorrelationTriple correlations(const std::vector<double>& x,
                               const std::vector<double>& r);

}  // namespace tbr
