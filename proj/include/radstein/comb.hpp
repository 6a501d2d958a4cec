#pragma once

#include "radstein/bounds.hpp"

namespace radstein {

// weighted combinatorial sum S = (q! mu^q(F))^{-1/2} sum_{t in F} b_t1...b_tq X_t1...X_tq
// over a set F of q-tuples with pairwise distinct components; mu({i}) = b_i^2
struct CombSpec {
    int q = 0;
    std::vector<Tuple> tuples;  // ordered tuples of F
    std::vector<double> b;      // b[i-1] is the weight of index i

    void validate() const;
};

// mu_b^{tensor q}(F) = sum over F of prod b^2
double comb_measure(const CombSpec& spec);

// symmetrization of b_t1...b_tq 1_F / (q! mu^q(F))^{1/2}; J_q of it equals S
Kernel comb_kernel(const CombSpec& spec);

// S as a pure chaos expansion
ChaosExpansion comb_functional(const CombSpec& spec);

struct PhiPsi {
    double phi = 0.0;                 // mu^{2q}(F#)^{1/2} / mu^q(F)
    double psi_sup = 0.0;             // sup_j Psi_j
    std::vector<double> psi;          // Psi_j = mu^q(F_j*) / mu^q(F), j = 1..max index
};

// F#: ordered pairs of component-disjoint F-tuples whose union splits into two
// F-tuples with signatures different from both originals
PhiPsi comb_phi_psi(const CombSpec& spec);

// fractional Cartesian product input: a connected m-cover of {1..q}
struct FcpSpec {
    int q = 0;
    int m = 0;
    std::vector<std::vector<int>> cover;  // q subsets of {1..q}, each of size m
    long long n = 0;                      // universe size, >= q^m

    void validate() const;
};

// K = floor(n^{1/m}); phi = lexicographic bijection [K]^m -> [n];
// F_n = symmetric closure of the off-diagonal projected image; unit weights on [n]
CombSpec fcp_build(const FcpSpec& spec);

// Phi and (sup Psi)^{1/4} as the constant-free theorem ingredients, plus the
// explicit contraction bound on the constructed kernel
BoundReport comb_bound(const CombSpec& spec);

}  // namespace radstein
