#pragma once

#include "radstein/bounds.hpp"

namespace radstein {

// weighted 2-runs G = sum_i a_i Y_i Y_{i+1} with Y_i = (1 - X_i)/2; the weights
// are the nonzero window of the bi-infinite sequence, shifted to 1-based indices
struct TwoRunsSpec {
    std::vector<double> weights;
};

// (3/16) sum a_i^2 + (1/8) sum a_i a_{i+1}
double two_runs_variance(const TwoRunsSpec& spec);

// chaos kernels of (G - EG)/sqrt(Var G): an order-1 and an order-2 kernel
std::pair<Kernel, Kernel> two_runs_kernels(const TwoRunsSpec& spec);

// J_1(f1) + J_2(f2) as an expansion on m+1 coordinates
ChaosExpansion two_runs_functional(const TwoRunsSpec& spec);

// pointwise (G(x) - EG)/sqrt(Var G)
Evaluator two_runs_evaluator(const TwoRunsSpec& spec);

// theorem max-arguments Var^{-3/2} sum |a|^3 and Var^{-1} (sum a^4)^{1/2},
// plus the fully explicit first-plus-second-chaos bound on the kernels
BoundReport two_runs_bound(const TwoRunsSpec& spec);

}  // namespace radstein
