#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "radstein/engine.hpp"

namespace radstein {

enum class ConstantsPolicy { Explicit, UnspecifiedPaperConstant };

struct EngineMeta {
    std::string mode = "exact";  // "exact" | "mc"
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    static EngineMeta from(const ExpectationEngine& e) {
        EngineMeta m;
        if (!e.is_exact()) {
            m.mode = "mc";
            m.samples = e.samples;
            m.seed = e.seed;
        }
        return m;
    }
};

// itemized bound: named terms in insertion order, a documented total,
// and whether the total carries paper constants that were never pinned
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    double total = 0.0;
    ConstantsPolicy constants_policy = ConstantsPolicy::Explicit;
    EngineMeta engine;
    std::vector<std::string> notes;

    void set(const std::string& key, double value) {
        for (auto& [k, v] : terms)
            if (k == key) { v = value; return; }
        terms.emplace_back(key, value);
    }
    double get(const std::string& key) const {
        for (const auto& [k, v] : terms)
            if (k == key) return v;
        throw std::invalid_argument("BoundReport: unknown term " + key);
    }
    bool has(const std::string& key) const {
        for (const auto& [k, v] : terms)
            if (k == key) return true;
        return false;
    }
};

std::string bound_report_to_json(const BoundReport& r);

struct Curve {
    std::string name;
    std::string x_label = "x";
    std::string y_label = "y";
    std::vector<std::pair<double, double>> points;
};

// header row, 17 significant digits per value
void emit_curve_csv(std::ostream& os, const Curve& c);

// shortest round-trip-exact decimal form
std::string format_double(double v);

// least-squares slope of log(y) against log(x); requires positive data
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace radstein
