#include "radstein/stein.hpp"

#include <cmath>
#include <map>

namespace radstein {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;
}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double erfcx(double t) {
    if (t < 15.0) return std::exp(t * t) * std::erfc(t);
    // asymptotic expansion, well inside 1e-14 relative for t >= 15
    const double u = 1.0 / (2.0 * t * t);
    return (1.0 - u * (1.0 - 3.0 * u * (1.0 - 5.0 * u))) / (t * 1.7724538509055159);
}

double stein_solution(double x, double z) {
    // f_x(z) = sqrt(2pi) e^{z^2/2} Phi(min(x,z)) (1 - Phi(max(x,z)))
    if (z <= x) return 0.5 * kSqrt2Pi * erfcx(-z / kSqrt2) * (1.0 - normal_cdf(x));
    return 0.5 * kSqrt2Pi * erfcx(z / kSqrt2) * normal_cdf(x);
}

double stein_solution_derivative(double x, double z) {
    return z * stein_solution(x, z) + (z <= x ? 1.0 : 0.0) - normal_cdf(x);
}

double exact_dK(const AtomicDistribution& law, double sigma2) {
    if (sigma2 <= 0.0) throw std::invalid_argument("exact_dK: sigma2 must be positive");
    const double sigma = std::sqrt(sigma2);
    double sup = 0.0;
    // the CDF difference is piecewise monotone between jumps, so the sup sits at
    // an atom, approached from the left or attained on the right
    for (const auto& [t, p] : law.atoms()) {
        const double phi = normal_cdf(t / sigma);
        sup = std::max(sup, std::abs(law.cdf(t) - phi));
        sup = std::max(sup, std::abs(law.cdf_left(t) - phi));
    }
    return sup;
}

EmpiricalDk empirical_dK(std::vector<double> samples, double sigma2) {
    if (samples.empty()) throw std::invalid_argument("empirical_dK: no samples");
    if (sigma2 <= 0.0) throw std::invalid_argument("empirical_dK: sigma2 must be positive");
    const double sigma = std::sqrt(sigma2);
    std::sort(samples.begin(), samples.end());
    const double N = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double phi = normal_cdf(samples[i] / sigma);
        d = std::max(d, (i + 1) / N - phi);
        d = std::max(d, phi - i / N);
    }
    EmpiricalDk out;
    out.estimate = d;
    out.dkw_band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * N));
    return out;
}

namespace {

struct WeightGroup {
    double w = 0.0;  // |a_i|
    int count = 0;
};

std::vector<WeightGroup> weight_groups(const std::vector<double>& a) {
    std::map<double, int> counts;
    for (double v : a)
        if (v != 0.0) ++counts[std::abs(v)];
    std::vector<WeightGroup> out;
    for (const auto& [w, c] : counts) out.push_back({w, c});
    return out;
}

// law of w * (sum of m independent signs): binomial atoms via log-gamma masses
void convolve_binomial(std::map<double, double>& acc, double w, int m) {
    std::vector<std::pair<double, double>> atoms(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double logp = std::lgamma(m + 1.0) - std::lgamma(j + 1.0) -
                            std::lgamma(m - j + 1.0) - m * std::log(2.0);
        atoms[j] = {w * (2.0 * j - m), std::exp(logp)};
    }
    if (acc.empty()) {
        for (const auto& [v, p] : atoms) acc[v] += p;
        return;
    }
    std::map<double, double> next;
    for (const auto& [v0, p0] : acc)
        for (const auto& [v, p] : atoms) next[v0 + v] += p0 * p;
    if (next.size() > 20000000) throw std::runtime_error("weighted_sum_law: support too large");
    acc.swap(next);
}

AtomicDistribution law_of_groups(const std::vector<WeightGroup>& groups) {
    std::map<double, double> acc;
    for (const auto& g : groups) convolve_binomial(acc, g.w, g.count);
    if (acc.empty()) acc[0.0] = 1.0;  // empty sum
    std::vector<std::pair<double, double>> v(acc.begin(), acc.end());
    return AtomicDistribution(std::move(v), /*normalize=*/true);
}

AtomicDistribution empirical_law(const std::vector<double>& a,
                                 const std::vector<WeightGroup>& groups,
                                 const ExpectationEngine& engine) {
    (void)groups;
    const int n = static_cast<int>(a.size());
    Evaluator S = [a, n](const RademacherPoint& x) {
        double s = 0.0;
        for (int i = 1; i <= n; ++i) s += a[i - 1] * x[i];
        return s;
    };
    std::vector<double> vals = mc_sample_values(S, n, engine.samples, engine.seed);
    std::map<double, double> acc;
    const double p = 1.0 / static_cast<double>(vals.size());
    for (double v : vals) acc[v] += p;
    std::vector<std::pair<double, double>> atoms(acc.begin(), acc.end());
    return AtomicDistribution(std::move(atoms), /*normalize=*/true);
}

}  // namespace

AtomicDistribution weighted_sum_law(const std::vector<double>& a) {
    return law_of_groups(weight_groups(a));
}

AtomicDistribution weighted_sum_law_excluding(const std::vector<double>& a, int exclude) {
    if (exclude < 1 || exclude > static_cast<int>(a.size()))
        throw std::invalid_argument("weighted_sum_law_excluding: index out of range");
    std::vector<double> rest = a;
    rest.erase(rest.begin() + (exclude - 1));
    return weighted_sum_law(rest);
}

std::function<double(double)> small_ball(const std::vector<double>& a, int exclude,
                                         const ExpectationEngine& engine) {
    if (exclude < 1 || exclude > static_cast<int>(a.size()))
        throw std::invalid_argument("small_ball: index out of range");
    const double r = std::abs(a[exclude - 1]);
    AtomicDistribution law;
    if (engine.is_exact()) {
        law = weighted_sum_law_excluding(a, exclude);
    } else {
        std::vector<double> rest = a;
        rest.erase(rest.begin() + (exclude - 1));
        law = empirical_law(rest, weight_groups(rest), engine);
    }
    return [law, r](double x) { return law.interval(x - r, x + r); };
}

SmallBallSup small_ball_sup(const std::vector<double>& a, const ExpectationEngine& engine) {
    // group coordinates by |a_k|: excluding any coordinate of the same weight
    // yields the same remainder law, so one law and one interval query per group
    auto groups = weight_groups(a);
    SmallBallSup out;
    if (groups.empty()) return out;  // all-zero weights: the sum is identically 0

    std::vector<AtomicDistribution> laws(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        std::vector<WeightGroup> rest = groups;
        if (--rest[gi].count == 0) rest.erase(rest.begin() + gi);
        if (engine.is_exact()) {
            laws[gi] = law_of_groups(rest);
        } else {
            std::vector<double> flat;
            for (const auto& g : rest) flat.insert(flat.end(), g.count, g.w);
            laws[gi] = empirical_law(flat, rest, engine);
        }
    }

    // breakpoints of the piecewise-constant candidate function
    std::map<double, bool> candidates;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (engine.is_exact()) {
            for (const auto& [t, p] : laws[gi].atoms()) {
                candidates[t - groups[gi].w] = true;
                candidates[t + groups[gi].w] = true;
            }
        } else {
            // quantile grid 1%..99% plus the (merged) sample atoms
            for (int pc = 1; pc <= 99; ++pc) {
                const double target = pc / 100.0;
                for (const auto& [t, p] : laws[gi].atoms())
                    if (laws[gi].cdf(t) >= target) { candidates[t] = true; break; }
            }
            for (const auto& [t, p] : laws[gi].atoms()) {
                candidates[t - groups[gi].w] = true;
                candidates[t + groups[gi].w] = true;
            }
        }
    }

    out.candidates = candidates.size();
    for (const auto& [x, dummy] : candidates) {
        double s = 0.0;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            s += groups[gi].count * groups[gi].w * groups[gi].w *
                 laws[gi].interval(x - groups[gi].w, x + groups[gi].w);
        if (s > out.value) {
            out.value = s;
            out.argmax = x;
        }
    }
    return out;
}

}  // namespace radstein
