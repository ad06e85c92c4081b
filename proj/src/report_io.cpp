#include "qspline/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qspline {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string to_csv(const FitReport& report) {
    std::string out = "x,y_target,y_estimate\n";
    for (const auto& p : report.points) {
        out += num(p.x) + "," + num(p.y) + "," + num(p.y_hat) + "\n";
    }
    return out;
}

std::string to_json(const FitReport& report) {
    nlohmann::ordered_json j;
    j["function"] = report.function;
    j["domain"] = {report.domain_lo, report.domain_hi};
    j["knots"] = report.knots;
    j["degree"] = report.degree;
    j["mode"] = report.mode;
    j["ansatz"] = report.ansatz;
    j["optimizer"] = report.optimizer;
    j["restarts"] = report.restarts;
    j["seed"] = report.seed;
    j["rng"] = report.rng;
    j["dilated"] = report.dilated;
    j["classical_only"] = report.classical_only;
    j["nrmse"] = report.nrmse;
    j["classical_nrmse"] = report.classical_nrmse;
    j["final_cost"] = report.final_cost;
    j["converged"] = report.converged;
    j["mean_bias"] = report.mean_bias;
    j["seconds"] = report.seconds;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : report.points) pts.push_back({p.x, p.y, p.y_hat});
    return j.dump(2) + "\n";
}

std::string report_stem(const FitReport& report) {
    return "fit_" + report.function + "_K" + std::to_string(report.knots) + "_seed" +
           std::to_string(report.seed);
}

std::string to_svg(const FitReport& report) {
    constexpr double width = 480, height = 360, margin = 50;
    double y_lo = 0.0, y_hi = 1.0;
    for (const auto& p : report.points) {
        y_lo = std::min({y_lo, p.y, p.y_hat});
        y_hi = std::max({y_hi, p.y, p.y_hat});
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
    auto sx = [&](double x) { return margin + x * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    for (double t : {0.0, 0.5, 1.0}) {
        os << "<text x=\"" << sx(t) << "\" y=\"" << height - margin + 16
           << "\" font-size=\"11\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    }
    for (double t : {0.0, 0.5, 1.0}) {
        os << "<text x=\"" << margin - 6 << "\" y=\"" << sy(t) + 4
           << "\" font-size=\"11\" text-anchor=\"end\">" << num(t) << "</text>\n";
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
       << "\" font-size=\"12\" text-anchor=\"middle\">x (normalized input)</text>\n";
    os << "<text x=\"14\" y=\"" << height / 2 << "\" font-size=\"12\" text-anchor=\"middle\" "
       << "transform=\"rotate(-90 14 " << height / 2 << ")\">normalized " << report.function
       << "</text>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" font-size=\"13\" text-anchor=\"middle\">"
       << report.function << ", K=" << report.knots << ", NRMSE=" << num(report.nrmse)
       << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& p : report.points) os << sx(p.x) << ',' << sy(p.y) << ' ';
    os << "\"/>\n";
    for (const auto& p : report.points) {
        os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y_hat)
           << "\" r=\"3.5\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }
    os << "<text x=\"" << width - margin << "\" y=\"" << margin
       << "\" font-size=\"11\" text-anchor=\"end\" fill=\"steelblue\">target</text>\n";
    os << "<text x=\"" << width - margin << "\" y=\"" << margin + 14
       << "\" font-size=\"11\" text-anchor=\"end\" fill=\"crimson\">estimate</text>\n";
    os << "</svg>\n";
    return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

BenchRow qsplines_baseline_row() {
    return {"QSplines", "20", {{"elu", 0.4874}, {"relu", 0.5240}, {"sigmoid", 0.1589}, {"sin", std::nullopt}}};
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    static const char* columns[] = {"elu", "relu", "sigmoid", "sin"};
    char line[160];
    std::string out;
    std::snprintf(line, sizeof(line), "%-12s %6s %10s %10s %10s %10s\n", "Model", "Knots", "Elu", "Relu",
                  "Sigmoid", "Sin");
    out += line;
    out += std::string(63, '-') + "\n";
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-12s %6s", row.model.c_str(), row.knots.c_str());
        out += line;
        for (const char* c : columns) {
            const auto it = row.nrmse.find(c);
            if (it == row.nrmse.end() || !it->second) {
                std::snprintf(line, sizeof(line), " %10s", "---");
            } else if (std::isnan(*it->second)) {
                std::snprintf(line, sizeof(line), " %10s", "NaN");
            } else if (*it->second != 0.0 && std::abs(*it->second) < 1e-4) {
                std::snprintf(line, sizeof(line), " %10.2e", *it->second);
            } else {
                std::snprintf(line, sizeof(line), " %10.4f", *it->second);
            }
            out += line;
        }
        out += "\n";
    }
    return out;
}

std::string bench_csv(const std::vector<FitReport>& reports) {
    std::string out = "function,knots,x,y_target,y_estimate,nrmse\n";
    for (const auto& r : reports) {
        for (const auto& p : r.points) {
            out += r.function + "," + std::to_string(r.knots) + "," + num(p.x) + "," + num(p.y) + "," +
                   num(p.y_hat) + "," + num(r.nrmse) + "\n";
        }
    }
    return out;
}

}  // namespace qspline
