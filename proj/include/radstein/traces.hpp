#pragma once

#include "radstein/bounds.hpp"

namespace radstein {

// traces of powers of the n x n Bernoulli matrix (X_ij / sqrt(n)) with all n^2
// entries independent signs; matrices are flat row-major vectors of +-1
struct MatrixSpec {
    int n = 0;
    std::vector<int> orders;  // strictly increasing positive powers

    void validate() const;
};

// bijection between matrix positions and kernel indices
Index edge_index(int i, int j, int n);          // (i-1)*n + j, all 1-based
std::pair<int, int> edge_unindex(Index e, int n);

// chaos kernel of the distinct-edge part of trace((X/sqrt n)^q), over edge indices
Kernel trace_kernel(int q, int n);

// E[trace((X/sqrt n)^q)]: closed q-walks whose directed edges all have even
// multiplicity, counted through set partitions of the walk positions
double expected_trace(int q, int n);

// raw trace of (x/sqrt n)^q for each requested power
std::vector<double> trace_powers(const std::vector<int>& x, int n, const std::vector<int>& orders);

// centred traces (trace - expected_trace) for every order in the spec
std::vector<double> trace_sample(const MatrixSpec& spec, const std::vector<int>& x);

// centred trace minus the evaluated chaos part; vanishes identically for q <= 2
double trace_remainder(int q, int n, const std::vector<int>& x);

struct TraceExperiment {
    std::vector<double> chaos_variance;               // q_i! ||f||^2 at spec.n
    std::vector<std::vector<double>> covariance;      // sampled covariance of centred traces
    std::vector<std::vector<double>> covariance_se;   // standard errors (0 in exact mode)
    std::vector<Curve> decay_curves;                  // (n, ||f *_r^r f||) per order and r
    std::vector<std::pair<std::string, double>> decay_slopes;
    BoundReport contraction_bound;                    // multivariate bound at spec.n
};

TraceExperiment trace_experiment(const MatrixSpec& spec, const ExpectationEngine& engine,
                                 const std::vector<int>& decay_ns = {10, 20, 40, 80});

}  // namespace radstein
