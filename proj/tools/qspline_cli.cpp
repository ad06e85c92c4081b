// qspline: fit activation functions with a simulated variational linear solver.
//
//   qspline fit --function sigmoid --knots 16 --seed 7 --out results --svg
//   qspline bench [--classical-only]
//   qspline decompose --block 0.5 0.3
//   qspline decompose --function sigmoid --knots 4
//
// Exit codes: 0 success, 1 invalid arguments, 2 solver did not reach its cost target
// (best effort still written), 3 I/O failure, 4 a benchmark function failed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qspline/decomp.hpp"
#include "qspline/pipeline.hpp"
#include "qspline/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitIo = 3;
constexpr int kExitBenchFailure = 4;

struct Options {
    std::string function = "sigmoid";
    std::size_t knots = 16;
    unsigned degree = 1;
    std::string mode = "exact";
    std::uint64_t shots = 10000;
    unsigned restarts = 5;
    unsigned layers = 0;
    std::uint64_t seed = 42;
    bool seed_given = false;
    std::string out = "results";
    bool svg = false;
    bool classical_only = false;
    bool dilate = false;
    std::string optimizer = "bfgs";
    std::string entangler = "linear-cx";
    std::size_t max_iterations = 2000;
    double learning_rate = 0.1;
    double tolerance = 1e-10;
    std::vector<double> block;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw UsageError("invalid boolean '" + v + "'");
}

// Flat key=value file; '#' starts a comment. Keys are flag names without dashes.
void apply_config_file(const std::string& path, Options& o) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (eq == std::string::npos) {
            if (!trim(line).empty()) throw UsageError("malformed config line: " + line);
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "function") o.function = val;
            else if (key == "knots") o.knots = std::stoul(val);
            else if (key == "degree") o.degree = static_cast<unsigned>(std::stoul(val));
            else if (key == "mode") o.mode = val;
            else if (key == "shots") o.shots = std::stoull(val);
            else if (key == "restarts") o.restarts = static_cast<unsigned>(std::stoul(val));
            else if (key == "layers") o.layers = static_cast<unsigned>(std::stoul(val));
            else if (key == "seed") { o.seed = std::stoull(val); o.seed_given = true; }
            else if (key == "out") o.out = val;
            else if (key == "svg") o.svg = parse_bool(val);
            else if (key == "classical-only") o.classical_only = parse_bool(val);
            else if (key == "dilate") o.dilate = parse_bool(val);
            else if (key == "optimizer") o.optimizer = val;
            else if (key == "entangler") o.entangler = val;
            else if (key == "max-iterations") o.max_iterations = std::stoul(val);
            else if (key == "learning-rate") o.learning_rate = std::stod(val);
            else if (key == "tolerance") o.tolerance = std::stod(val);
            else throw UsageError("unknown config key '" + key + "'");
        } catch (const std::logic_error&) {
            throw UsageError("invalid value for config key '" + key + "'");
        }
    }
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--knots", o.knots, "System size K (power of two, 2..64)");
    cmd->add_option("--degree", o.degree, "B-spline degree");
    cmd->add_option("--mode", o.mode, "exact or shots")->check(CLI::IsMember({"exact", "shots"}));
    cmd->add_option("--shots", o.shots, "Shots per Hadamard test in shots mode");
    cmd->add_option("--restarts", o.restarts, "Optimizer restarts");
    cmd->add_option("--layers", o.layers, "Ansatz layers (0 = default for the width)");
    cmd->add_option("--seed", o.seed, "Run seed (falls back to QSPLINE_SEED, then 42)");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_flag("--svg", o.svg, "Also write SVG plots");
    cmd->add_flag("--classical-only", o.classical_only, "Skip the variational solve");
    cmd->add_flag("--dilate", o.dilate, "Solve the Hermitian dilation of S");
    cmd->add_option("--optimizer", o.optimizer, "bfgs, gradient-descent or simplex")
        ->check(CLI::IsMember({"bfgs", "gradient-descent", "simplex"}));
    cmd->add_option("--entangler", o.entangler, "linear-cx, linear-cz, ring-cz or none")
        ->check(CLI::IsMember({"linear-cx", "linear-cz", "ring-cz", "none"}));
    cmd->add_option("--max-iterations", o.max_iterations, "Iteration budget per restart");
    cmd->add_option("--learning-rate", o.learning_rate, "Initial step size");
    cmd->add_option("--tolerance", o.tolerance, "Stall threshold on cost improvement");
    cmd->add_option("--config", "Flat key=value file; flags win");
}

qspline::FitConfig to_fit_config(const Options& o, const std::string& function) {
    qspline::FitConfig c;
    try {
        c.function = qspline::TargetFunction::from_name(function);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.knots < 2 || o.knots > 64 || (o.knots & (o.knots - 1)) != 0) {
        throw UsageError("--knots must be a power of two between 2 and 64");
    }
    if (o.degree > 3) throw UsageError("--degree must be between 0 and 3");
    if (o.restarts == 0) throw UsageError("--restarts must be positive");
    if (o.mode == "shots" && o.shots == 0) throw UsageError("--shots must be positive");
    c.knots = o.knots;
    c.degree = o.degree;
    c.layers = o.layers;
    c.classical_only = o.classical_only;
    c.dilate = o.dilate;
    c.solve.seed = o.seed;
    c.solve.restarts = o.restarts;
    c.solve.max_iterations = o.max_iterations;
    c.solve.learning_rate = o.learning_rate;
    c.solve.tolerance = o.tolerance;
    if (o.mode == "shots") c.solve.mode = qspline::ShotsMode{o.shots, o.seed};
    if (o.optimizer == "gradient-descent") c.solve.optimizer = qspline::OptimizerKind::GradientDescent;
    else if (o.optimizer == "simplex") c.solve.optimizer = qspline::OptimizerKind::NelderMead;
    else c.solve.optimizer = qspline::OptimizerKind::Bfgs;
    if (o.entangler == "linear-cz") c.entangler = qspline::Entangler::LinearCz;
    else if (o.entangler == "ring-cz") c.entangler = qspline::Entangler::RingCz;
    else if (o.entangler == "none") c.entangler = qspline::Entangler::None;
    else c.entangler = qspline::Entangler::LinearCx;
    return c;
}

int run_fit_command(const Options& o) {
    const auto config = to_fit_config(o, o.function);
    const auto report = qspline::run_fit(config);
    const std::filesystem::path dir(o.out);
    const std::string stem = qspline::report_stem(report);
    try {
        qspline::write_text(dir / (stem + ".csv"), qspline::to_csv(report));
        qspline::write_text(dir / (stem + ".json"), qspline::to_json(report));
        if (o.svg) qspline::write_text(dir / (stem + ".svg"), qspline::to_svg(report));
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::printf("function=%s knots=%zu mode=%s nrmse=%.6g classical_nrmse=%.3g final_cost=%.3g "
                "bias=%.4g seconds=%.2f\n",
                report.function.c_str(), report.knots, report.mode.c_str(), report.nrmse,
                report.classical_nrmse, report.final_cost, report.mean_bias, report.seconds);
    std::printf("wrote %s\n", (dir / (stem + ".csv")).string().c_str());
    if (!report.converged) {
        std::cerr << "warning: best cost " << report.final_cost
                  << " is above the convergence target; results are best effort\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int run_bench_command(const Options& o) {
    using qspline::BenchRow;
    std::vector<qspline::FitReport> reports;
    BenchRow quantum{"GHQSplines", std::to_string(o.knots), {}};
    BenchRow classical{"Classical", std::to_string(o.knots), {}};
    bool failed = false;
    bool not_converged = false;
    for (const auto kind : qspline::kAllFunctions) {
        const std::string name = qspline::TargetFunction::standard(kind).name();
        try {
            const auto config = to_fit_config(o, name);
            auto report = qspline::run_fit(config);
            classical.nrmse[name] = report.classical_nrmse;
            if (!o.classical_only) quantum.nrmse[name] = report.nrmse;
            not_converged = not_converged || !report.converged;
            std::fprintf(stderr, "%-8s nrmse=%.6g final_cost=%.3g bias=%+.4g %.2fs\n", name.c_str(),
                         report.nrmse, report.final_cost, report.mean_bias, report.seconds);
            reports.push_back(std::move(report));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            std::cerr << "error: " << name << ": " << e.what() << "\n";
            quantum.nrmse[name] = std::nan("");
            classical.nrmse[name] = std::nan("");
            failed = true;
        }
    }
    std::vector<BenchRow> rows{qspline::qsplines_baseline_row()};
    if (!o.classical_only) rows.push_back(quantum);
    rows.push_back(classical);
    std::cout << qspline::format_bench_table(rows);

    const std::filesystem::path dir(o.out);
    const std::string stem = "bench_K" + std::to_string(o.knots) + "_seed" + std::to_string(o.seed) +
                             (o.classical_only ? "_classical" : "");
    try {
        qspline::write_text(dir / (stem + ".csv"), qspline::bench_csv(reports));
        if (o.svg) {
            for (const auto& r : reports) {
                qspline::write_text(dir / (qspline::report_stem(r) + ".svg"), qspline::to_svg(r));
            }
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    if (failed) return kExitBenchFailure;
    return not_converged ? kExitNotConverged : kExitOk;
}

void print_decomposition(const qspline::LcuDecomposition& d, double error) {
    std::printf("unitary,coefficient\n");
    for (const auto& t : d.terms) std::printf("%s,%.12g\n", t.unitary.label().c_str(), t.coefficient);
    std::printf("# terms: %zu\n# max-abs reconstruction error: %.3g\n", d.terms.size(), error);
}

int run_decompose_command(const Options& o, bool function_given) {
    if (!o.block.empty()) {
        if (function_given) throw UsageError("use either --block or --function");
        const double a = o.block[0];
        const double b = o.block[1];
        auto d = qspline::decompose_block(a, b);
        qspline::Matrix target(2, 2);
        target(0, 0) = 1.0 - a;
        target(0, 1) = a;
        target(1, 1) = 1.0 - b;
        const double err = qspline::max_abs_diff(qspline::reconstruct(d), target);
        // Zero coefficients carry no information in the listing.
        std::erase_if(d.terms, [](const qspline::LcuTerm& t) { return t.coefficient == 0.0; });
        print_decomposition(d, err);
        return kExitOk;
    }
    if (!function_given) throw UsageError("decompose needs --block A B or --function NAME --knots K");
    const auto config = to_fit_config(o, o.function);
    const auto sys = qspline::build_system(config.function, config.knots, config.degree);
    const auto d = qspline::pauli_decompose(sys.design.entries);
    print_decomposition(d, qspline::max_abs_diff(qspline::reconstruct(d), sys.design.entries));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    // The config file seeds the defaults before flags are parsed, so flags win.
    try {
        for (int i = 1; i + 1 < argc; ++i) {
            if (std::string(argv[i]) == "--config") apply_config_file(argv[i + 1], o);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!o.seed_given) {
        if (const char* env = std::getenv("QSPLINE_SEED")) {
            try {
                o.seed = std::stoull(env);
            } catch (const std::logic_error&) {
                std::cerr << "error: QSPLINE_SEED is not an integer\n";
                return kExitUsage;
            }
        }
    }

    CLI::App app{"Spline fitting with a simulated variational quantum linear solver"};
    app.require_subcommand(1);

    auto* fit = app.add_subcommand("fit", "Fit one function and write CSV/JSON (and SVG)");
    fit->add_option("--function", o.function, "sigmoid, relu, elu or sin");
    add_common(fit, o);

    auto* bench = app.add_subcommand("bench", "Run all four functions and print the NRMSE table");
    add_common(bench, o);

    auto* decompose = app.add_subcommand("decompose", "Print a linear combination of unitaries");
    auto* block_opt = decompose->add_option("--block", o.block, "Decompose [[1-a, a], [0, 1-b]]")
                          ->expected(2);
    auto* fn_opt = decompose->add_option("--function", o.function, "Decompose this function's system");
    decompose->add_option("--knots", o.knots, "System size K");
    decompose->add_option("--degree", o.degree, "B-spline degree");
    decompose->add_option("--config", "Flat key=value file; flags win");
    (void)block_opt;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*fit) return run_fit_command(o);
        if (*bench) return run_bench_command(o);
        return run_decompose_command(o, fn_opt->count() > 0);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
