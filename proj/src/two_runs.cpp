#include "radstein/two_runs.hpp"

#include <cmath>

namespace radstein {

namespace {

void check(const TwoRunsSpec& spec) {
    bool nonzero = false;
    for (double a : spec.weights) nonzero |= (a != 0.0);
    if (!nonzero) throw std::invalid_argument("two_runs: need at least one nonzero weight");
}

}  // namespace

double two_runs_variance(const TwoRunsSpec& spec) {
    check(spec);
    const auto& a = spec.weights;
    double v = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        v += 3.0 / 16.0 * a[i] * a[i];
        if (i + 1 < a.size()) v += 1.0 / 8.0 * a[i] * a[i + 1];
    }
    return v;
}

std::pair<Kernel, Kernel> two_runs_kernels(const TwoRunsSpec& spec) {
    const double var = two_runs_variance(spec);
    if (var <= 0.0) throw std::invalid_argument("two_runs_kernels: zero variance");
    const double s = std::sqrt(var);
    const auto& a = spec.weights;
    Kernel f1(1), f2(2);
    // Y_i Y_{i+1} = (1 - X_i - X_{i+1} + X_i X_{i+1})/4, so the first-chaos
    // weights enter with a minus sign
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Index k = static_cast<Index>(i + 1);
        f1.add({k}, -a[i] / (4.0 * s));
        f1.add({k + 1}, -a[i] / (4.0 * s));
        f2.add({k, k + 1}, a[i] / (8.0 * s));
    }
    return {f1, f2};
}

ChaosExpansion two_runs_functional(const TwoRunsSpec& spec) {
    auto [f1, f2] = two_runs_kernels(spec);
    ChaosExpansion F(static_cast<int>(spec.weights.size()) + 1);
    F.set_term(f1);
    F.set_term(f2);
    return F;
}

Evaluator two_runs_evaluator(const TwoRunsSpec& spec) {
    const double var = two_runs_variance(spec);
    if (var <= 0.0) throw std::invalid_argument("two_runs_evaluator: zero variance");
    const std::vector<double> a = spec.weights;
    double mean = 0.0;
    for (double v : a) mean += v / 4.0;
    const double s = std::sqrt(var);
    return [a, mean, s](const RademacherPoint& x) {
        double g = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const int k = static_cast<int>(i + 1);
            g += a[i] * (1.0 - x[k]) * (1.0 - x[k + 1]) / 4.0;
        }
        return (g - mean) / s;
    };
}

BoundReport two_runs_bound(const TwoRunsSpec& spec) {
    const double var = two_runs_variance(spec);
    if (var <= 0.0) throw std::invalid_argument("two_runs_bound: zero variance");
    double cubes = 0.0, quartics = 0.0;
    for (double v : spec.weights) {
        cubes += std::abs(v) * std::abs(v) * std::abs(v);
        quartics += v * v * v * v;
    }
    auto [f1, f2] = two_runs_kernels(spec);
    BoundReport inner = sum12_bound(f1, f2);

    BoundReport r;
    r.name = "two_runs";
    r.constants_policy = ConstantsPolicy::UnspecifiedPaperConstant;
    r.set("theorem_arg_cubic", std::pow(var, -1.5) * cubes);
    r.set("theorem_arg_quartic", std::sqrt(quartics) / var);
    r.set("theorem_max_arg",
          std::max(std::pow(var, -1.5) * cubes, std::sqrt(quartics) / var));
    for (const auto& [k, v] : inner.terms) r.set("explicit_" + k, v);
    r.set("explicit_total", inner.total);
    r.total = inner.total;
    r.notes.push_back("total is the fully explicit first-plus-second-chaos value; "
                      "theorem_max_arg multiplies a constant the source never pins");
    r.notes.push_back("weights occupy window 1..m of a bi-infinite sequence; "
                      "functional lives on coordinates 1..m+1");
    return r;
}

}  // namespace radstein
