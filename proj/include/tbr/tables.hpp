#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tbr/montecarlo.hpp"

namespace tbr {

// Reference values shipped with the library: mean/median/MISE per
// (n, theta0, criterion) for the eight numeric tables, and averaged
// correlation coefficients for the two correlation tables.
struct ReferenceCell {
    double mean;
    double median;
    double mise;
};

// table 1..8 -> (model, a_divisor): odd tables use a = b/2, even a = b/20;
// 1,2 -> model 1; 3,4 -> model 2; 5,6 -> model 3; 7,8 -> model 4.
struct TableLayout {
    int model;
    double a_divisor;
};
TableLayout table_layout(int table);

// n in {50, 100}, theta0 in {0, 0.5, 1, 1.5, 2}, criterion TKS/TCM/TKSCM/TCMKS.
const ReferenceCell& reference_cell(int table, std::size_t n, double theta0,
                                    Criterion criterion);

// Correlation references: table "cor1" is model 3, "cor2" is model 4, both
// at n = 100 and theta0 = 0.5. Rows ordered original, true, TKS, TCM,
// TKSCM, TCMKS.
const CorrelationTriple& reference_correlation(const std::string& table,
                                               std::size_t row);

struct NumericTableRow {
    std::size_t n;
    double theta0;
    Criterion criterion;
    ReferenceCell reference;
    std::optional<McCell> reproduced;  // empty when reps == 0
};

struct CorrelationTableRow {
    std::string label;
    CorrelationTriple reference;
    std::optional<CorrelationTriple> reproduced;
};

struct TableReport {
    std::string table_id;
    std::size_t reps;
    // exactly one of the two row kinds is populated
    std::vector<NumericTableRow> numeric_rows;
    std::vector<CorrelationTableRow> correlation_rows;
};

// table_id in {"1", ..., "8", "cor1", "cor2"}; reps == 0 emits only the
// reference values. Throws std::invalid_argument on an unknown id.
TableReport reproduce_table(const std::string& table_id, std::size_t reps,
                            std::uint64_t master_seed, std::size_t threads);

// Side-by-side text rendering, 6 significant digits.
void print_table_report(const TableReport& report, std::ostream& out);

}  // namespace tbr
