#include "radstein/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace radstein {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string bound_report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [k, v] : r.terms) terms[k] = v;
    j["terms"] = terms;
    j["total"] = r.total;
    j["constants_policy"] =
        r.constants_policy == ConstantsPolicy::Explicit ? "Explicit" : "UnspecifiedPaperConstant";
    nlohmann::json eng;
    eng["mode"] = r.engine.mode;
    eng["samples"] = r.engine.samples;
    eng["seed"] = r.engine.seed;
    eng["rng"] = CounterRng::name();
    j["engine"] = eng;
    j["notes"] = r.notes;
    return j.dump();
}

void emit_curve_csv(std::ostream& os, const Curve& c) {
    os << c.x_label << "," << c.y_label << "\n";
    for (const auto& [x, y] : c.points)
        os << format_double(x) << "," << format_double(y) << "\n";
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (const auto& [x, y] : points) {
        if (x <= 0.0 || y <= 0.0) throw std::invalid_argument("loglog_slope: data must be positive");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace radstein
