#pragma once

// CSV, JSON and SVG output for fit reports.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qspline/pipeline.hpp"

namespace qspline {

/// Header `x,y_target,y_estimate`, one row per point, 12 significant digits.
std::string to_csv(const FitReport& report);

/// Replay configuration and scores as JSON.
std::string to_json(const FitReport& report);

/// Standalone SVG: target as a polyline, estimates as markers.
std::string to_svg(const FitReport& report);

/// Base file name `fit_<fn>_K<k>_seed<seed>` (no extension).
std::string report_stem(const FitReport& report);

/// Writes `text` to `path`, creating parent directories. Throws std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

/// One row of the benchmark table: NRMSE per function name, nullopt when not run.
struct BenchRow {
    std::string model;
    std::string knots;
    std::map<std::string, std::optional<double>> nrmse;
};

/// QSplines baseline at 20 knots (elu 0.4874, relu 0.5240, sigmoid 0.1589, sin not run).
BenchRow qsplines_baseline_row();

/// Fixed-width table with columns Model, Knots, Elu, Relu, Sigmoid, Sin.
std::string format_bench_table(const std::vector<BenchRow>& rows);

/// Combined CSV: function,knots,x,y_target,y_estimate,nrmse.
std::string bench_csv(const std::vector<FitReport>& reports);

}  // namespace qspline
