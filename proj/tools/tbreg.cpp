#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbr/correlation.hpp"
#include "tbr/criterion.hpp"
#include "tbr/dataset.hpp"
#include "tbr/minimize.hpp"
#include "tbr/montecarlo.hpp"
#include "tbr/simgen.hpp"
#include "tbr/tables.hpp"
#include "tbr/transform.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TBREG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return 42;
}

int run_gen(int model, std::size_t n, double theta0, const std::string& design,
            std::uint64_t seed, const std::string& out_path) {
    tbr::ScenarioSpec spec = tbr::ScenarioSpec::model(
        model, theta0, n,
        design == "random" ? tbr::Design::Random : tbr::Design::Fixed, seed);
    const tbr::Dataset data = tbr::make_dataset(spec);
    if (out_path.empty()) {
        data.write_csv(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + out_path);
        }
        data.write_csv(out);
    }
    return 0;
}

int run_fit(const std::string& data_path, const std::string& family,
            const std::string& criterion, double bn, double an,
            double theta_min, double theta_max, bool emit_boundary) {
    std::ifstream in(data_path);
    if (!in) {
        throw std::runtime_error("cannot open data file: " + data_path);
    }
    const tbr::Dataset data = tbr::Dataset::read_csv(in, tbr::Design::Random);
    const std::size_t n = data.size();

    tbr::Bandwidths bw = tbr::Bandwidths::default_rule(n);
    if (bn > 0.0) bw.b = bn;
    if (an > 0.0) bw.a = an;
    else if (bn > 0.0) bw.a = bn / 2.0;

    tbr::Family fam = tbr::Family::YeoJohnson;
    if (family == "identity") fam = tbr::Family::Identity;
    else if (family == "sas") fam = tbr::Family::SinhArcsinh;

    tbr::ThetaBox box;
    if (fam == tbr::Family::SinhArcsinh) {
        // default sinh-arcsinh search box; theta-min/-max apply to theta1
        box.dims = {{theta_min == -0.5 ? 0.2 : theta_min,
                     theta_max == 2.5 ? 5.0 : theta_max},
                    {-2.0, 2.0}};
    } else if (fam == tbr::Family::Identity) {
        box.dims = {};
    } else {
        box = tbr::ThetaBox::scalar(theta_min, theta_max);
    }

    const tbr::CriterionSpec spec{tbr::criterion_from_name(criterion), 100};

    json result;
    tbr::TransformSpec transform;
    if (fam == tbr::Family::Identity) {
        transform = tbr::TransformSpec::identity();
        result["theta_hat"] = json::array();
        tbr::BoundaryFit fit(data, transform, bw.b);
        tbr::SmoothedBoundary smooth(fit, bw.a);
        result["criterion_value"] = tbr::mn(data, transform, smooth, spec);
    } else {
        const tbr::ThetaEstimate est =
            tbr::minimize_theta(data, fam, box, bw, spec);
        transform.family = fam;
        transform.params = est.theta_hat;
        result["theta_hat"] = est.theta_hat.size() == 1
                                  ? json(est.theta_hat[0])
                                  : json(est.theta_hat);
        result["criterion_value"] = est.criterion_value;
        result["evaluations"] = est.evaluations;
    }
    result["criterion"] = tbr::criterion_name(spec.kind);
    result["n"] = n;
    result["bn"] = bw.b;
    result["an"] = bw.a;
    result["family"] = transform.name();

    tbr::BoundaryFit fit(data, transform, bw.b);
    tbr::SmoothedBoundary smooth(fit, bw.a);
    const std::vector<double> res = tbr::residuals(data, transform, smooth);
    double rmin = res[0], rmax = res[0], rsum = 0.0;
    std::size_t nonpos = 0;
    for (double r : res) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        rsum += r;
        if (r <= 0.0) ++nonpos;
    }
    result["residual_summary"] = {
        {"min", rmin},
        {"max", rmax},
        {"mean", rsum / static_cast<double>(n)},
        {"frac_nonpositive", static_cast<double>(nonpos) / static_cast<double>(n)}};
    const tbr::CorrelationTriple cor = tbr::correlations(data.xs(), res);
    result["correlations"] = {{"pearson", cor.pearson},
                              {"kendall", cor.kendall},
                              {"spearman", cor.spearman}};
    if (emit_boundary) {
        json grid = json::array();
        for (int i = 0; i <= 200; ++i) {
            const double x = static_cast<double>(i) / 200.0;
            grid.push_back({{"x", x},
                            {"raw", fit.eval_raw(x)},
                            {"smooth", smooth.eval(x).value}});
        }
        result["boundary"] = std::move(grid);
    }
    std::cout << result.dump(2) << "\n";
    return 0;
}

int run_table(const std::string& table_id, std::size_t reps,
              std::uint64_t seed, std::size_t threads) {
    std::cerr << "reproducing table " << table_id << " with " << reps
              << " replications on " << threads << " thread(s)\n";
    const tbr::TableReport report =
        tbr::reproduce_table(table_id, reps, seed, threads);
    tbr::print_table_report(report, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-parametric transformation boundary regression"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset (CSV)");
    int model = 1;
    std::size_t n = 100;
    double theta0 = 1.0;
    std::string design = "fixed";
    std::uint64_t seed = default_seed();
    std::string out_path;
    gen->add_option("--model", model, "simulation model 1..4")
        ->check(CLI::Range(1, 4));
    gen->add_option("--n", n, "sample size (>= 2)")->check(CLI::Range(2, 1 << 24));
    gen->add_option("--theta0", theta0, "true transformation parameter")
        ->check(CLI::Range(-0.5, 2.5));
    gen->add_option("--design", design, "fixed | random")
        ->check(CLI::IsMember({"fixed", "random"}));
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--out", out_path, "output file (default: stdout)");

    // fit
    auto* fit = app.add_subcommand("fit", "estimate the transformation parameter");
    std::string data_path, family = "yj", criterion = "tcm";
    double bn = 0.0, an = 0.0, theta_min = -0.5, theta_max = 2.5;
    bool emit_boundary = false;
    fit->add_option("--data", data_path, "input CSV (header x,y)")->required();
    fit->add_option("--family", family, "yj | sas | identity")
        ->check(CLI::IsMember({"yj", "sas", "identity"}));
    fit->add_option("--criterion", criterion, "tks | tcm | tkscm | tcmks")
        ->check(CLI::IsMember({"tks", "tcm", "tkscm", "tcmks", "TKS", "TCM",
                               "TKSCM", "TCMKS"}));
    fit->add_option("--bn", bn, "window bandwidth (default n^(-1/3))");
    fit->add_option("--an", an, "smoothing bandwidth (default bn/2)");
    fit->add_option("--theta-min", theta_min, "search interval lower end");
    fit->add_option("--theta-max", theta_max, "search interval upper end");
    fit->add_flag("--emit-boundary", emit_boundary,
                  "include the fitted boundary on a 201-point grid");

    // table
    auto* table = app.add_subcommand("table", "reproduce a reference table");
    std::string table_id;
    std::size_t reps = 1000, threads = 1;
    std::uint64_t tseed = default_seed();
    table->add_option("--table", table_id, "1..8 | cor1 | cor2")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "cor1",
                               "cor2"}));
    table->add_option("--reps", reps, "replications (0: reference only)");
    table->add_option("--seed", tseed, "master seed");
    table->add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (theta_min > theta_max) throw std::invalid_argument("bad box");
            return run_gen(model, n, theta0, design, seed, out_path);
        }
        if (fit->parsed()) {
            if (theta_min > theta_max) {
                std::cerr << "error: --theta-min exceeds --theta-max\n";
                return 2;
            }
            return run_fit(data_path, family, criterion, bn, an, theta_min,
                           theta_max, emit_boundary);
        }
        if (table->parsed()) {
            return run_table(table_id, reps, tseed, threads);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
