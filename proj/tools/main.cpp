// Command-line surface: build bifiltrations, sample Hilbert functions,
// run the duality oracle, and drive the canned experiments.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 guard violation.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dowker/bifiltration.hpp"
#include "dowker/duality.hpp"
#include "dowker/experiments.hpp"
#include "dowker/formats.hpp"
#include "dowker/homology.hpp"
#include "dowker/relations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuardViolation = 3;

struct BuildOptions {
    std::string points_file;
    std::string lambda_file;
    std::string relation = "euclidean";
    bool header = false;
    int m_max = 1;
    int dim = 0;
    double r_max = std::numeric_limits<double>::infinity();
    bool no_halve = false;
    bool negate_weight = false;
    std::string out;
};

struct HilbertOptions {
    std::string in;
    int degree = 1;
    double m_min = 1.0;
    double m_max = 0.0;  // 0: take the complex's recorded maximum
    int m_steps = 0;     // 0: one step per integer weight
    double r_min = 0.0;
    double r_max = -1.0;  // <0: take the complex's recorded maximum
    int r_steps = 50;
    bool quantile = false;
    std::string out;
    std::string heatmap;
};

struct DualityOptions {
    std::string lambda_file;
    bool header = false;
    double r = 0.0;
    int m_max = 0;  // 0: up to the column count
    int random_count = 0;
    int rows = 5;
    int cols = 5;
    std::uint64_t seed = 1;
    std::string csv;
};

struct ExperimentOptions {
    std::string kind;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int n = 0;         // 0: module default
    int m_max = 0;     // 0: module default
    int grid_steps = 0;
};

dowker::Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return dowker::Metric::euclidean;
    if (name == "cosine") return dowker::Metric::cosine;
    throw dowker::input_error("unknown metric: " + name);
}

dowker::LambdaMatrix load_relation(const BuildOptions& opt) {
    if (!opt.lambda_file.empty()) {
        return dowker::read_lambda_csv_file(opt.lambda_file, opt.header);
    }
    auto X = dowker::read_point_cloud_csv_file(opt.points_file, opt.header);
    if (opt.relation == "knn") return dowker::knn_rank_lambda(X, dowker::Metric::euclidean);
    return dowker::distance_lambda(X, X, parse_metric(opt.relation));
}

int cmd_build(const BuildOptions& opt) {
    dowker::BuildParams params;
    params.m_max = opt.m_max;
    params.dim_max = opt.dim;
    params.r_max = opt.r_max;
    params.halve_radii = !opt.no_halve;
    auto C = dowker::build_measure_dowker(load_relation(opt), params);
    dowker::write_bifiltration_file(opt.out, C, opt.negate_weight);
    std::cout << "wrote " << C.simplices.size() << " simplices to " << opt.out << "\n";
    return kExitOk;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> values;
    if (steps == 1) {
        values.push_back(lo);
        return values;
    }
    for (int i = 0; i < steps; ++i) {
        values.push_back(lo + (hi - lo) * i / (steps - 1));
    }
    return values;
}

// r values at equispaced quantiles of the recorded appearance radii, so
// sample points track where the complex actually changes.
std::vector<double> quantile_grid(const dowker::BifilteredComplex& C, int steps) {
    std::vector<double> radii;
    for (const auto& fs : C.simplices) {
        for (const auto& bd : fs.appearances) radii.push_back(bd.r);
    }
    if (radii.empty()) return linear_grid(0.0, 1.0, steps);
    std::sort(radii.begin(), radii.end());
    std::vector<double> values;
    for (int i = 0; i < steps; ++i) {
        const double q = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        const auto idx = static_cast<std::size_t>(q * (radii.size() - 1));
        values.push_back(radii[idx]);
    }
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

int cmd_hilbert(const HilbertOptions& opt) {
    auto C = dowker::read_bifiltration_file(opt.in);

    const double m_hi = opt.m_max > 0 ? opt.m_max : static_cast<double>(C.m_max);
    const int m_steps =
        opt.m_steps > 0 ? opt.m_steps
                        : std::max(1, static_cast<int>(std::floor(m_hi - opt.m_min)) + 1);
    if (m_hi < opt.m_min) throw dowker::input_error("hilbert: empty weight range");
    std::vector<double> m_values = linear_grid(opt.m_min, m_hi, m_steps);

    double r_hi = opt.r_max >= 0 ? opt.r_max : C.r_max;
    if (!std::isfinite(r_hi)) r_hi = 1.0;
    if (r_hi < opt.r_min) throw dowker::input_error("hilbert: empty radius range");
    std::vector<double> r_values =
        opt.quantile ? quantile_grid(C, opt.r_steps) : linear_grid(opt.r_min, r_hi, opt.r_steps);

    auto grid = dowker::hilbert_grid(C, m_values, r_values, opt.degree);
    dowker::write_hilbert_csv_file(opt.out, grid);
    if (!opt.heatmap.empty()) dowker::write_hilbert_pgm_file(opt.heatmap, grid);
    std::cout << "wrote " << m_values.size() << "x" << r_values.size() << " grid to " << opt.out
              << "\n";
    return kExitOk;
}

void print_report(const dowker::DualityReport& report, std::ostream& text, std::ostream* csv,
                  int instance) {
    for (const auto& row : report.rows) {
        text << "  m=" << row.m << " degree=" << row.degree << " left=" << row.betti_left
             << " right=" << row.betti_right << (row.equal() ? "" : "  MISMATCH") << "\n";
        if (csv) {
            *csv << instance << ',' << row.m << ',' << row.degree << ',' << row.betti_left << ','
                 << row.betti_right << ',' << (row.equal() ? "equal" : "mismatch") << "\n";
        }
    }
}

int cmd_duality_check(const DualityOptions& opt) {
    std::ofstream csv_file;
    std::ostream* csv = nullptr;
    if (!opt.csv.empty()) {
        csv_file.open(opt.csv);
        if (!csv_file) throw dowker::input_error("cannot open " + opt.csv + " for writing");
        csv_file << "instance,m,degree,betti_left,betti_right,status\n";
        csv = &csv_file;
    }

    bool all_equal = true;
    auto run_instance = [&](const dowker::LambdaMatrix& L, int instance) {
        const int m_hi = opt.m_max > 0 ? opt.m_max : static_cast<int>(L.cols());
        std::vector<int> m_range;
        for (int m = 1; m <= m_hi; ++m) m_range.push_back(m);
        auto report = dowker::check_total_weight_duality(L, opt.r, m_range);
        std::cout << "instance " << instance << ": "
                  << (report.passed() ? "pass" : "MISMATCH") << "\n";
        print_report(report, std::cout, csv, instance);
        all_equal = all_equal && report.passed();
    };

    if (opt.random_count > 0) {
        for (int i = 0; i < opt.random_count; ++i) {
            auto L = dowker::random_uniform_lambda(static_cast<std::size_t>(opt.rows),
                                                   static_cast<std::size_t>(opt.cols),
                                                   opt.seed + static_cast<std::uint64_t>(i));
            for (std::size_t a = 0; a < L.rows(); ++a) {
                for (std::size_t b = 0; b < L.cols(); ++b) {
                    L(a, b) = L(a, b) < 0.5 ? 0.0 : dowker::kNoRelation;
                }
            }
            run_instance(L, i);
        }
    } else {
        run_instance(dowker::read_lambda_csv_file(opt.lambda_file, opt.header), 0);
    }
    return all_equal ? kExitOk : kExitCheckFailure;
}

void write_grid_artifacts(const std::filesystem::path& dir, const std::string& stem,
                          const dowker::HilbertGrid& grid) {
    dowker::write_hilbert_csv_file((dir / (stem + ".csv")).string(), grid);
    dowker::write_hilbert_pgm_file((dir / (stem + ".pgm")).string(), grid);
}

int cmd_experiment(const ExperimentOptions& opt) {
    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);

    if (opt.kind == "annulus") {
        dowker::AnnulusParams params;
        params.seed = opt.seed;
        if (opt.n > 0) params.n_points = opt.n;
        if (opt.m_max > 0) params.m_max = opt.m_max;
        if (opt.grid_steps > 0) params.grid_steps = opt.grid_steps;
        auto result = dowker::run_annulus_experiment(params);

        std::ofstream timings(dir / "timings.csv");
        timings << "cloud,build_seconds,homology_seconds\n";
        for (std::size_t c = 0; c < result.labels.size(); ++c) {
            write_grid_artifacts(dir, "annulus_h1_" + result.labels[c], result.grids[c]);
            timings << result.labels[c] << ',' << result.build_seconds[c] << ','
                    << result.homology_seconds[c] << "\n";
        }
        std::cout << "wrote annulus artifacts to " << dir.string() << "\n";
        return kExitOk;
    }

    if (opt.kind == "er") {
        dowker::ErParams params;
        params.seed = opt.seed;
        if (opt.n > 0) params.n = opt.n;
        if (opt.m_max > 0) {
            params.m_list.clear();
            for (int m = 1; m <= opt.m_max; ++m) params.m_list.push_back(m);
        }
        if (opt.grid_steps > 0) {
            params.p_grid.clear();
            for (int i = 0; i < opt.grid_steps; ++i) {
                params.p_grid.push_back(opt.grid_steps == 1
                                            ? 0.0
                                            : static_cast<double>(i) / (opt.grid_steps - 1));
            }
        }
        auto result = dowker::run_er_experiment(params);
        write_grid_artifacts(dir, "er_h0", result.h0);
        write_grid_artifacts(dir, "er_h1", result.h1);
        std::ofstream timings(dir / "timings.csv");
        timings << "build_seconds\n" << result.build_seconds << "\n";
        std::cout << "wrote ER artifacts to " << dir.string() << "\n";
        return kExitOk;
    }

    throw dowker::input_error("unknown experiment: " + opt.kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"density-sensitive bifiltered Dowker complexes"};
    app.require_subcommand(1);

    BuildOptions build;
    auto* cmd_b = app.add_subcommand("build", "construct a bifiltered Dowker complex");
    auto* points_opt = cmd_b->add_option("--points", build.points_file, "point-cloud CSV");
    auto* lambda_opt = cmd_b->add_option("--lambda", build.lambda_file, "relation matrix CSV");
    points_opt->excludes(lambda_opt);
    cmd_b->add_option("--relation", build.relation, "euclidean | cosine | knn")
        ->check(CLI::IsMember({"euclidean", "cosine", "knn"}));
    cmd_b->add_flag("--header", build.header, "skip the first CSV line");
    cmd_b->add_option("--mmax", build.m_max, "maximum weight")->required();
    cmd_b->add_option("--dim", build.dim, "maximum simplex dimension");
    cmd_b->add_option("--rmax", build.r_max, "radius cutoff");
    cmd_b->add_flag("--no-halve", build.no_halve, "keep raw values as radii");
    cmd_b->add_flag("--negate-weight", build.negate_weight, "write negated weights");
    cmd_b->add_option("--out", build.out, "output bifiltration file")->required();

    HilbertOptions hilbert;
    auto* cmd_h = app.add_subcommand("hilbert", "sample a Hilbert function on a grid");
    cmd_h->add_option("--in", hilbert.in, "bifiltration file")->required();
    cmd_h->add_option("--degree", hilbert.degree, "homology degree");
    cmd_h->add_option("--m-min", hilbert.m_min, "smallest weight");
    cmd_h->add_option("--m-max", hilbert.m_max, "largest weight (default: recorded maximum)");
    cmd_h->add_option("--m-steps", hilbert.m_steps, "weight samples (default: integer steps)");
    cmd_h->add_option("--r-min", hilbert.r_min, "smallest radius");
    cmd_h->add_option("--r-max", hilbert.r_max, "largest radius (default: recorded maximum)");
    cmd_h->add_option("--r-steps", hilbert.r_steps, "radius samples");
    cmd_h->add_flag("--quantile", hilbert.quantile,
                    "place radius samples at quantiles of the recorded radii");
    cmd_h->add_option("--out", hilbert.out, "output CSV")->required();
    cmd_h->add_option("--heatmap", hilbert.heatmap, "also write a log-scaled PGM");

    DualityOptions duality;
    auto* cmd_d = app.add_subcommand("duality-check", "verify total-weight duality");
    auto* dl = cmd_d->add_option("--lambda", duality.lambda_file, "relation matrix CSV");
    cmd_d->add_flag("--header", duality.header, "skip the first CSV line");
    cmd_d->add_option("--r", duality.r, "relation threshold");
    cmd_d->add_option("--mmax", duality.m_max, "largest weight to check");
    auto* dr = cmd_d->add_option("--random", duality.random_count,
                                 "check N random indicator relations instead");
    dr->excludes(dl);
    cmd_d->add_option("--rows", duality.rows, "random relation rows");
    cmd_d->add_option("--cols", duality.cols, "random relation columns");
    cmd_d->add_option("--seed", duality.seed, "random seed");
    cmd_d->add_option("--csv", duality.csv, "per-(instance, m, degree) CSV report");

    ExperimentOptions experiment;
    auto* cmd_e = app.add_subcommand("experiment", "run a canned experiment");
    cmd_e->add_option("kind", experiment.kind, "annulus | er")
        ->required()
        ->check(CLI::IsMember({"annulus", "er"}));
    cmd_e->add_option("--out", experiment.out_dir, "output directory");
    cmd_e->add_option("--seed", experiment.seed, "random seed");
    cmd_e->add_option("--n", experiment.n, "sample / matrix size");
    cmd_e->add_option("--mmax", experiment.m_max, "maximum weight");
    cmd_e->add_option("--grid-steps", experiment.grid_steps, "grid resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (cmd_b->parsed()) {
            if (build.points_file.empty() && build.lambda_file.empty()) {
                throw dowker::input_error("build: either --points or --lambda is required");
            }
            return cmd_build(build);
        }
        if (cmd_h->parsed()) return cmd_hilbert(hilbert);
        if (cmd_d->parsed()) {
            if (duality.random_count <= 0 && duality.lambda_file.empty()) {
                throw dowker::input_error(
                    "duality-check: either --lambda or --random is required");
            }
            return cmd_duality_check(duality);
        }
        if (cmd_e->parsed()) return cmd_experiment(experiment);
    } catch (const dowker::guard_error& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return kExitGuardViolation;
    } catch (const dowker::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
