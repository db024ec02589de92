#include "tbr/tables.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tbr {

namespace {

// [table-1][n-index (50, 100)][theta0-index (0, .5, 1, 1.5, 2)]
// [criterion (TKS, TCM, TKSCM, TCMKS)]

const ReferenceCell kTables[8][2][5][4] = {
    // table 1: model 1, a = b/2
    {
     {
      {{0.162, 0.162, 0.120}, {0.095, 0.122, 0.060}, {0.216, 0.241, 0.149}, {0.196, 0.183, 0.141}},
      {{0.643, 0.646, 0.142}, {0.576, 0.595, 0.080}, {0.766, 0.800, 0.250}, {0.691, 0.646, 0.204}},
      {{1.120, 1.190, 0.232}, {1.100, 1.090, 0.121}, {1.340, 1.380, 0.335}, {1.200, 1.310, 0.287}},
      {{1.610, 1.720, 0.228}, {1.640, 1.670, 0.133}, {1.900, 1.920, 0.336}, {1.620, 1.780, 0.282}},
      {{1.810, 2.020, 0.357}, {2.110, 2.130, 0.076}, {2.310, 2.460, 0.179}, {1.860, 2.060, 0.297}},
     },
     {
      {{0.014, -0.039, 0.055}, {-0.014, -0.029, 0.019}, {0.098, 0.092, 0.031}, {-0.006, -0.021, 0.026}},
      {{0.483, 0.496, 0.041}, {0.461, 0.451, 0.026}, {0.625, 0.618, 0.049}, {0.503, 0.523, 0.047}},
      {{0.951, 0.964, 0.062}, {0.949, 0.950, 0.034}, {1.150, 1.140, 0.059}, {1.000, 1.010, 0.071}},
      {{1.500, 1.490, 0.050}, {1.470, 1.450, 0.040}, {1.670, 1.660, 0.078}, {1.520, 1.520, 0.077}},
      {{1.960, 2.000, 0.071}, {1.970, 1.960, 0.034}, {2.150, 2.150, 0.065}, {1.970, 2.030, 0.074}},
     },
    },
    // table 2: model 1, a = b/20
    {
     {
      {{0.154, 0.146, 0.126}, {-0.059, -0.051, 0.050}, {0.198, 0.205, 0.114}, {0.173, 0.171, 0.128}},
      {{0.613, 0.635, 0.118}, {0.511, 0.513, 0.066}, {0.717, 0.735, 0.173}, {0.658, 0.646, 0.163}},
      {{1.120, 1.190, 0.182}, {1.030, 1.030, 0.091}, {1.280, 1.300, 0.230}, {1.190, 1.270, 0.221}},
      {{1.630, 1.690, 0.164}, {1.560, 1.540, 0.095}, {1.830, 1.810, 0.233}, {1.620, 1.740, 0.209}},
      {{1.880, 2.040, 0.272}, {2.050, 2.080, 0.066}, {2.280, 2.370, 0.149}, {1.870, 2.040, 0.272}},
     },
     {
      {{0.003, 0.046, 0.040}, {0.045, 0.057, 0.020}, {0.078, 0.067, 0.026}, {0.005, 0.022, 0.025}},
      {{0.454, 0.448, 0.037}, {0.418, 0.406, 0.028}, {0.581, 0.566, 0.033}, {0.473, 0.478, 0.046}},
      {{0.938, 0.950, 0.053}, {0.913, 0.918, 0.038}, {1.100, 1.080, 0.047}, {0.984, 0.986, 0.070}},
      {{1.450, 1.420, 0.052}, {1.410, 1.390, 0.041}, {1.600, 1.590, 0.050}, {1.470, 1.440, 0.062}},
      {{1.950, 1.960, 0.057}, {1.930, 1.910, 0.037}, {2.100, 2.100, 0.053}, {1.940, 1.980, 0.066}},
     },
    },
    // table 3: model 2, a = b/2
    {
     {
      {{0.192, 0.197, 0.102}, {0.001, 0.009, 0.037}, {-0.038, -0.139, 0.118}, {0.225, 0.208, 0.118}},
      {{0.778, 0.691, 0.191}, {0.378, 0.402, 0.092}, {0.239, 0.302, 0.410}, {0.858, 0.798, 0.274}},
      {{1.290, 1.340, 0.233}, {0.728, 0.741, 0.232}, {0.388, 0.264, 1.000}, {1.370, 1.350, 0.308}},
      {{1.750, 1.790, 0.195}, {1.160, 1.290, 0.368}, {0.507, 0.292, 1.810}, {1.790, 1.790, 0.222}},
      {{1.940, 2.060, 0.201}, {1.590, 1.750, 0.478}, {0.585, 0.424, 2.880}, {1.970, 2.060, 0.141}},
     },
     {
      {{0.017, 0.018, 0.037}, {0.080, 0.079, 0.014}, {0.061, 0.073, 0.022}, {-0.020, -0.004, 0.020}},
      {{0.496, 0.517, 0.028}, {0.338, 0.346, 0.042}, {0.516, 0.578, 0.080}, {0.521, 0.548, 0.032}},
      {{0.973, 0.979, 0.044}, {0.745, 0.745, 0.092}, {0.906, 1.050, 0.225}, {1.030, 1.020, 0.054}},
      {{1.480, 1.460, 0.059}, {1.210, 1.230, 0.123}, {1.310, 1.510, 0.412}, {1.510, 1.490, 0.060}},
      {{1.960, 2.000, 0.059}, {1.690, 1.740, 0.144}, {1.550, 1.860, 0.822}, {1.920, 1.940, 0.058}},
     },
    },
    // table 4: model 2, a = b/20
    {
     {
      {{0.156, 0.167, 0.076}, {-0.050, -0.062, 0.031}, {0.022, 0.103, 0.095}, {0.191, 0.198, 0.086}},
      {{0.713, 0.646, 0.130}, {0.324, 0.336, 0.088}, {0.268, 0.407, 0.348}, {0.781, 0.695, 0.197}},
      {{1.260, 1.310, 0.191}, {0.655, 0.646, 0.242}, {0.447, 0.511, 0.919}, {1.330, 1.350, 0.258}},
      {{1.720, 1.780, 0.188}, {1.100, 1.180, 0.365}, {0.619, 0.559, 1.660}, {1.720, 1.780, 0.177}},
      {{1.970, 2.060, 0.141}, {1.550, 1.660, 0.442}, {0.726, 0.619, 2.630}, {1.960, 2.060, 0.111}},
     },
     {
      {{0.001, 0.050, 0.044}, {0.129, 0.128, 0.023}, {0.028, 0.037, 0.016}, {-0.014, -0.042, 0.015}},
      {{0.467, 0.474, 0.033}, {0.282, 0.287, 0.063}, {0.497, 0.533, 0.057}, {0.481, 0.486, 0.034}},
      {{0.934, 0.942, 0.043}, {0.674, 0.649, 0.130}, {0.878, 0.999, 0.190}, {0.965, 0.960, 0.049}},
      {{1.420, 1.390, 0.056}, {1.120, 1.130, 0.185}, {1.320, 1.500, 0.336}, {1.440, 1.400, 0.053}},
      {{1.910, 1.920, 0.071}, {1.590, 1.610, 0.228}, {1.560, 1.850, 0.790}, {1.850, 1.790, 0.079}},
     },
    },
    // table 5: model 3, a = b/2
    {
     {
      {{0.141, 0.010, 0.309}, {0.020, 0.012, 0.008}, {-0.056, -0.053, 0.016}, {0.137, 0.028, 0.260}},
      {{0.519, 0.549, 0.039}, {0.518, 0.506, 0.023}, {0.521, 0.532, 0.040}, {0.546, 0.574, 0.038}},
      {{1.010, 1.010, 0.085}, {1.000, 0.996, 0.040}, {0.996, 0.998, 0.071}, {1.040, 1.030, 0.077}},
      {{1.530, 1.530, 0.125}, {1.500, 1.490, 0.066}, {1.500, 1.510, 0.113}, {1.550, 1.570, 0.110}},
      {{1.960, 2.060, 0.118}, {2.010, 2.040, 0.069}, {1.950, 2.000, 0.156}, {1.970, 2.050, 0.093}},
     },
     {
      {{0.019, 0.009, 0.022}, {0.006, 0.000, 0.004}, {0.043, 0.038, 0.007}, {-0.014, -0.007, 0.013}},
      {{0.522, 0.524, 0.023}, {0.505, 0.498, 0.013}, {0.562, 0.555, 0.020}, {0.528, 0.524, 0.022}},
      {{1.030, 1.030, 0.042}, {1.010, 1.000, 0.021}, {1.080, 1.080, 0.038}, {1.030, 1.020, 0.042}},
      {{1.550, 1.550, 0.061}, {1.510, 1.510, 0.030}, {1.600, 1.590, 0.055}, {1.550, 1.550, 0.061}},
      {{2.040, 2.060, 0.066}, {2.000, 2.000, 0.037}, {2.070, 2.070, 0.061}, {2.020, 2.050, 0.058}},
     },
    },
    // table 6: model 3, a = b/20
    {
     {
      {{0.097, 0.031, 0.223}, {0.005, 0.016, 0.008}, {-0.037, -0.030, 0.013}, {-0.087, -0.001, 0.174}},
      {{0.487, 0.506, 0.039}, {0.479, 0.462, 0.021}, {0.506, 0.508, 0.036}, {0.514, 0.522, 0.035}},
      {{0.976, 0.978, 0.092}, {0.965, 0.962, 0.044}, {0.984, 0.997, 0.074}, {1.020, 1.020, 0.078}},
      {{1.499, 1.469, 0.120}, {1.440, 1.430, 0.063}, {1.450, 1.470, 0.119}, {1.530, 1.500, 0.105}},
      {{1.920, 1.990, 0.105}, {1.960, 1.960, 0.069}, {1.940, 1.940, 0.127}, {1.930, 1.970, 0.086}},
     },
     {
      {{0.017, 0.004, 0.016}, {0.004, 0.000, 0.004}, {0.042, 0.039, 0.007}, {-0.010, -0.007, 0.007}},
      {{0.530, 0.537, 0.021}, {0.507, 0.497, 0.011}, {0.563, 0.554, 0.019}, {0.534, 0.539, 0.021}},
      {{1.020, 1.020, 0.042}, {1.000, 1.000, 0.020}, {1.080, 1.070, 0.035}, {1.020, 1.010, 0.039}},
      {{1.550, 1.560, 0.064}, {1.510, 1.510, 0.031}, {1.600, 1.600, 0.054}, {1.560, 1.550, 0.064}},
      {{2.050, 2.060, 0.069}, {2.020, 2.040, 0.041}, {2.090, 2.100, 0.064}, {2.030, 2.060, 0.059}},
     },
    },
    // table 7: model 4, a = b/2
    {
     {
      {{0.054, 0.062, 0.218}, {-0.029, -0.029, 0.005}, {0.000, 0.000, 0.000}, {0.050, 0.046, 0.182}},
      {{0.419, 0.427, 0.038}, {0.412, 0.408, 0.027}, {0.469, 0.478, 0.025}, {0.458, 0.470, 0.030}},
      {{0.887, 0.881, 0.080}, {0.791, 0.770, 0.104}, {0.942, 0.971, 0.077}, {0.934, 0.933, 0.069}},
      {{1.360, 1.350, 0.130}, {1.210, 1.270, 0.214}, {1.310, 1.420, 0.319}, {1.410, 1.350, 0.111}},
      {{1.800, 1.790, 0.165}, {1.560, 1.690, 0.504}, {1.249, 1.769, 1.739}, {1.810, 1.790, 0.141}},
     },
     {
      {{0.025, 0.043, 0.004}, {-0.037, -0.038, 0.003}, {0.012, 0.009, 0.002}, {-0.034, -0.054, 0.004}},
      {{0.459, 0.458, 0.017}, {0.406, 0.405, 0.016}, {0.520, 0.518, 0.008}, {0.449, 0.453, 0.017}},
      {{0.922, 0.945, 0.038}, {0.845, 0.856, 0.046}, {1.030, 1.040, 0.017}, {0.907, 0.909, 0.044}},
      {{1.430, 1.350, 0.056}, {1.290, 1.310, 0.080}, {1.540, 1.540, 0.032}, {1.400, 1.350, 0.063}},
      {{1.930, 1.970, 0.072}, {1.740, 1.770, 0.126}, {1.880, 2.010, 0.419}, {1.850, 1.790, 0.090}},
     },
    },
    // table 8: model 4, a = b/20
    {
     {
      {{0.021, 0.062, 0.177}, {0.053, 0.057, 0.007}, {0.013, 0.010, 0.007}, {0.017, 0.062, 0.141}},
      {{0.404, 0.415, 0.044}, {0.375, 0.380, 0.034}, {0.449, 0.461, 0.029}, {0.434, 0.445, 0.034}},
      {{0.851, 0.830, 0.086}, {0.737, 0.695, 0.119}, {0.915, 0.931, 0.074}, {0.895, 0.891, 0.076}},
      {{1.330, 1.350, 0.150}, {1.130, 1.200, 0.260}, {1.310, 1.410, 0.293}, {1.380, 1.350, 0.119}},
      {{1.760, 1.790, 0.176}, {1.520, 1.610, 0.435}, {1.409, 1.770, 1.250}, {1.770, 1.790, 0.156}},
     },
     {
      {{0.027, 0.043, 0.004}, {-0.038, -0.040, 0.003}, {0.011, 0.008, 0.002}, {0.037, 0.062, 0.004}},
      {{0.462, 0.466, 0.018}, {0.411, 0.407, 0.015}, {0.524, 0.522, 0.008}, {0.453, 0.460, 0.019}},
      {{0.930, 0.950, 0.037}, {0.849, 0.856, 0.043}, {1.040, 1.030, 0.018}, {0.917, 0.915, 0.042}},
      {{1.440, 1.390, 0.058}, {1.300, 1.320, 0.078}, {1.550, 1.540, 0.031}, {1.420, 1.350, 0.065}},
      {{1.930, 1.960, 0.067}, {1.730, 1.760, 0.130}, {1.830, 2.010, 0.509}, {1.840, 1.790, 0.091}},
     },
    },
};

// rows: original, true, TKS, TCM, TKSCM, TCMKS
const std::array<CorrelationTriple, 6> kCor1 = {{
    {-0.634, -0.456, -0.612},
    {0.001, 0.001, 0.001},
    {0.001, 0.001, 0.001},
    {0.009, 0.006, 0.008},
    {0.005, 0.002, 0.004},
    {0.002, 0.001, 0.001},
}};
const std::array<CorrelationTriple, 6> kCor2 = {{
    {-0.273, -0.165, -0.234},
    {0.005, 0.003, 0.004},
    {0.008, 0.004, 0.007},
    {0.024, 0.014, 0.021},
    {0.011, 0.007, 0.009},
    {0.003, 0.001, 0.002},
}};

constexpr std::array<double, 5> kTheta0s = {0.0, 0.5, 1.0, 1.5, 2.0};
constexpr std::array<std::size_t, 2> kNs = {50, 100};
constexpr std::array<Criterion, 4> kCriteria = {Criterion::TKS, Criterion::TCM,
                                                Criterion::TKSCM,
                                                Criterion::TCMKS};

std::size_t n_index(std::size_t n) {
    if (n == 50) return 0;
    if (n == 100) return 1;
    throw std::invalid_argument("reference tables cover n in {50, 100}");
}

std::size_t theta0_index(double theta0) {
    for (std::size_t i = 0; i < kTheta0s.size(); ++i) {
        if (kTheta0s[i] == theta0) return i;
    }
    throw std::invalid_argument("reference tables cover theta0 in {0,0.5,1,1.5,2}");
}

}  // namespace

TableLayout table_layout(int table) {
    if (table < 1 || table > 8) {
        throw std::invalid_argument("table id must be 1..8");
    }
    return {(table - 1) / 2 + 1, table % 2 == 1 ? 2.0 : 20.0};
}

const ReferenceCell& reference_cell(int table, std::size_t n, double theta0,
                                    Criterion criterion) {
    if (table < 1 || table > 8) {
        throw std::invalid_argument("table id must be 1..8");
    }
    return kTables[static_cast<std::size_t>(table - 1)][n_index(n)]
                  [theta0_index(theta0)][static_cast<std::size_t>(criterion)];
}

const CorrelationTriple& reference_correlation(const std::string& table,
                                               std::size_t row) {
    if (row >= 6) throw std::invalid_argument("correlation row must be 0..5");
    if (table == "cor1") return kCor1[row];
    if (table == "cor2") return kCor2[row];
    throw std::invalid_argument("unknown correlation table: " + table);
}

TableReport reproduce_table(const std::string& table_id, std::size_t reps,
                            std::uint64_t master_seed, std::size_t threads) {
    TableReport report;
    report.table_id = table_id;
    report.reps = reps;

    if (table_id == "cor1" || table_id == "cor2") {
        const int model = table_id == "cor1" ? 3 : 4;
        std::optional<CorrelationStudy> study;
        if (reps > 0) {
            study = run_correlation_study(model, 100, 0.5, reps, 2.0,
                                          master_seed, threads);
        }
        const char* labels[6] = {"Original data", "True parameter",
                                 "TKS", "TCM", "TKSCM", "TCMKS"};
        for (std::size_t row = 0; row < 6; ++row) {
            CorrelationTableRow out;
            out.label = labels[row];
            out.reference = reference_correlation(table_id, row);
            if (study) out.reproduced = study->rows[row].avg;
            report.correlation_rows.push_back(std::move(out));
        }
        return report;
    }

    int table = 0;
    try {
        std::size_t used = 0;
        table = std::stoi(table_id, &used);
        if (used != table_id.size()) table = 0;
    } catch (const std::exception&) {
        table = 0;
    }
    if (table < 1 || table > 8) {
        throw std::invalid_argument("unknown table id: " + table_id);
    }
    const TableLayout layout = table_layout(table);

    std::optional<McSummary> summary;
    if (reps > 0) {
        McConfig config;
        config.model = layout.model;
        config.a_divisor = layout.a_divisor;
        config.reps = reps;
        config.master_seed = master_seed;
        config.threads = threads;
        summary = run_mc(config);
    }
    for (std::size_t n : kNs) {
        for (double theta0 : kTheta0s) {
            for (Criterion c : kCriteria) {
                NumericTableRow row;
                row.n = n;
                row.theta0 = theta0;
                row.criterion = c;
                row.reference = reference_cell(table, n, theta0, c);
                if (summary) {
                    const McCell* cell = summary->find(n, theta0, c);
                    if (cell) row.reproduced = *cell;
                }
                report.numeric_rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

void print_table_report(const TableReport& report, std::ostream& out) {
    char buf[256];
    if (!report.correlation_rows.empty()) {
        std::snprintf(buf, sizeof(buf),
                      "table %s (model %d, n=100, theta0=0.5, reps=%zu)\n",
                      report.table_id.c_str(),
                      report.table_id == "cor1" ? 3 : 4, report.reps);
        out << buf;
        out << "method          coef  reference  reproduced   |dev|\n";
        const char* coefs[3] = {"pearson", "kendall", "spearman"};
        for (const CorrelationTableRow& row : report.correlation_rows) {
            const double ref[3] = {row.reference.pearson, row.reference.kendall,
                                     row.reference.spearman};
            double repro[3] = {0, 0, 0};
            if (row.reproduced) {
                repro[0] = row.reproduced->pearson;
                repro[1] = row.reproduced->kendall;
                repro[2] = row.reproduced->spearman;
            }
            for (int c = 0; c < 3; ++c) {
                if (row.reproduced) {
                    std::snprintf(buf, sizeof(buf),
                                  "%-15s %-8s %8.6g  %10.6g  %6.6g\n",
                                  row.label.c_str(), coefs[c], ref[c], repro[c],
                                  std::abs(repro[c] - ref[c]));
                } else {
                    std::snprintf(buf, sizeof(buf),
                                  "%-15s %-8s %8.6g         N/A     N/A\n",
                                  row.label.c_str(), coefs[c], ref[c]);
                }
                out << buf;
            }
        }
        return;
    }

    const TableLayout layout = table_layout(std::stoi(report.table_id));
    std::snprintf(buf, sizeof(buf),
                  "table %s (model %d, a=b/%g, reps=%zu)\n",
                  report.table_id.c_str(), layout.model, layout.a_divisor,
                  report.reps);
    out << buf;
    out << "  n theta0 criterion | reference mean/median/mise |"
           " reproduced mean/median/mise |  |dev mean| fail\n";
    for (const NumericTableRow& row : report.numeric_rows) {
        if (row.reproduced) {
            const McCell& r = *row.reproduced;
            std::snprintf(buf, sizeof(buf),
                          "%3zu %6.3g %-9s | %8.6g %8.6g %8.6g | %9.6g %9.6g "
                          "%8.6g | %10.6g %4zu\n",
                          row.n, row.theta0, criterion_name(row.criterion),
                          row.reference.mean, row.reference.median, row.reference.mise,
                          r.mean, r.median, r.mise,
                          std::abs(r.mean - row.reference.mean), r.failures);
        } else {
            std::snprintf(buf, sizeof(buf),
                          "%3zu %6.3g %-9s | %8.6g %8.6g %8.6g |       N/A     "
                          "  N/A      N/A |        N/A  N/A\n",
                          row.n, row.theta0, criterion_name(row.criterion),
                          row.reference.mean, row.reference.median, row.reference.mise);
        }
        out << buf;
    }
}

}  // namespace tbr
