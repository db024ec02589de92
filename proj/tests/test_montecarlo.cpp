#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tbr/montecarlo.hpp"
#include "tbr/tables.hpp"

using namespace tbr;

namespace {

McConfig small_config() {
    McConfig config;
    config.model = 1;
    config.ns = {60};
    config.theta0s = {0.5};
    config.reps = 6;
    config.criteria = {Criterion::TCM};
    config.master_seed = 7;
    return config;
}

}  // namespace

TEST_CASE("single replication statistics") {
    McConfig config = small_config();
    config.reps = 1;
    const McSummary summary = run_mc(config);
    REQUIRE(summary.cells.size() == 1);
    const McCell& cell = summary.cells[0];
    CHECK(cell.reps_used == 1);
    CHECK(cell.failures == 0);
    CHECK(cell.mean == cell.median);
    CHECK(cell.mise ==
          doctest::Approx((cell.mean - 0.5) * (cell.mean - 0.5)).epsilon(1e-12));
}

TEST_CASE("bias-variance identity") {
    const McSummary summary = run_mc(small_config());
    const McCell& cell = summary.cells[0];
    // mise = bias^2 + population variance of the estimates
    CHECK(cell.mise >= (cell.mean - cell.theta0) * (cell.mean - cell.theta0) -
                           1e-12);
}

TEST_CASE("reproducibility across thread counts") {
    McConfig config = small_config();
    config.threads = 1;
    const McSummary a = run_mc(config);
    config.threads = 4;
    const McSummary b = run_mc(config);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].mean == b.cells[i].mean);
        CHECK(a.cells[i].median == b.cells[i].median);
        CHECK(a.cells[i].mise == b.cells[i].mise);
    }
    std::ostringstream sa, sb;
    write_summary_csv(a, sa);
    write_summary_csv(b, sb);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("summary csv layout") {
    const McSummary summary = run_mc(small_config());
    std::ostringstream out;
    write_summary_csv(summary, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "model,n,a_rule,criterion,theta0,mean,median,mise,failures");
    std::string row;
    std::getline(in, row);
    CHECK(row.rfind("1,60,b/2,TCM,", 0) == 0);
}

TEST_CASE("reference fixtures expose the documented cells") {
    const ReferenceCell& c = reference_cell(1, 100, 0.5, Criterion::TCM);
    CHECK(c.mean == 0.461);
    CHECK(c.median == 0.451);
    CHECK(c.mise == 0.026);
    const ReferenceCell& k = reference_cell(1, 100, 2.0, Criterion::TKS);
    CHECK(k.mean == 1.960);
    CHECK(k.mise == 0.071);
    const CorrelationTriple& orig = reference_correlation("cor2", 0);
    CHECK(orig.pearson == -0.273);
    const CorrelationTriple& tcmks = reference_correlation("cor2", 5);
    CHECK(tcmks.pearson == 0.003);
    CHECK_THROWS(reference_cell(9, 100, 0.5, Criterion::TCM));
    CHECK_THROWS(reference_cell(1, 75, 0.5, Criterion::TCM));
    CHECK_THROWS(reference_correlation("cor3", 0));
}

TEST_CASE("table layout mapping") {
    CHECK(table_layout(1).model == 1);
    CHECK(table_layout(1).a_divisor == 2.0);
    CHECK(table_layout(2).model == 1);
    CHECK(table_layout(2).a_divisor == 20.0);
    CHECK(table_layout(7).model == 4);
    CHECK(table_layout(7).a_divisor == 2.0);
    CHECK(table_layout(8).a_divisor == 20.0);
}

TEST_CASE("reference-only table report") {
    const TableReport report = reproduce_table("1", 0, 42, 1);
    CHECK(report.numeric_rows.size() == 2 * 5 * 4);
    for (const auto& row : report.numeric_rows) {
        CHECK_FALSE(row.reproduced.has_value());
    }
    std::ostringstream out;
    print_table_report(report, out);
    CHECK(out.str().find("N/A") != std::string::npos);
    CHECK_THROWS_AS(reproduce_table("9", 0, 42, 1), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_table("bogus", 0, 42, 1), std::invalid_argument);
}

TEST_CASE("small correlation study reduces dependence") {
    const CorrelationStudy study =
        run_correlation_study(4, 100, 0.5, 8, 2.0, 42, 1);
    REQUIRE(study.rows.size() == 6);
    CHECK(study.rows[0].label == "original");
    // untransformed residuals carry the induced negative dependence
    CHECK(study.rows[0].avg.pearson < 0.0);
    // at the true parameter the dependence is essentially gone
    CHECK(std::abs(study.rows[1].avg.pearson) <
          std::abs(study.rows[0].avg.pearson));
}
