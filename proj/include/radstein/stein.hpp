#pragma once

#include "radstein/engine.hpp"

namespace radstein {

// standard normal CDF, absolute error below 1e-12
double normal_cdf(double x);

// exp(t^2) erfc(t), stable for large positive t
double erfcx(double t);

// bounded solution f_x of f'(z) - z f(z) = 1(z <= x) - Phi(x)
double stein_solution(double x, double z);
// its derivative from the Stein equation itself (z != x for the classical sense)
double stein_solution_derivative(double x, double z);

// sup_t |P(law <= t) - Phi(t / sigma)| over atom locations, left and right limits
double exact_dK(const AtomicDistribution& law, double sigma2);

struct EmpiricalDk {
    double estimate = 0.0;
    double dkw_band = 0.0;  // sqrt(ln(2/alpha) / (2N)) at alpha = 0.01
};
// one-sample Kolmogorov-Smirnov statistic against N(0, sigma2); sorts a copy
EmpiricalDk empirical_dK(std::vector<double> samples, double sigma2);

// law of sum_i a_i X_i (exact convolution over distinct-weight groups)
AtomicDistribution weighted_sum_law(const std::vector<double>& a);
// same with coordinate `exclude` (1-based) removed
AtomicDistribution weighted_sum_law_excluding(const std::vector<double>& a, int exclude);

// x -> P(x - |a_k| < sum_{i != k} a_i X_i <= x + |a_k|)
std::function<double(double)> small_ball(const std::vector<double>& a, int exclude,
                                         const ExpectationEngine& engine);

struct SmallBallSup {
    double value = 0.0;       // sup_x sum_k a_k^2 P(x - |a_k| < S_k <= x + |a_k|)
    double argmax = 0.0;
    std::size_t candidates = 0;  // size of the candidate set scanned
};
// sup over the finite candidate set {atom +- |a_k|}; exact when engine is exact,
// empirical-quantile grid plus sample atoms in Monte Carlo mode
SmallBallSup small_ball_sup(const std::vector<double>& a, const ExpectationEngine& engine);

}  // namespace radstein
