#pragma once

#include "radstein/malliavin.hpp"
#include "radstein/report.hpp"
#include "radstein/stein.hpp"

namespace radstein {

struct CovarianceSpec {
    int d = 0;
    std::vector<std::vector<double>> sigma;

    static CovarianceSpec identity(int d);
    // checks symmetry and positive semi-definiteness (eigenvalue floor -1e-10)
    void validate() const;
};

// Kolmogorov bound terms A1..A4 for a centred functional, plus the
// Cauchy-Schwarz corollary variants; sup over x runs over the finite
// breakpoint set of the indicator terms (exact engine) or sample breakpoints
BoundReport malliavin_stein_terms(const ChaosExpansion& F, const ExpectationEngine& engine);

// first-chaos bound: 2 sum |a|^3 plus the weighted small-ball supremum
BoundReport first_chaos_bound(const std::vector<double>& a,
                              const ExpectationEngine& engine = ExpectationEngine::exact());

// contraction bound for J_q(f), q >= 2, target variance sigma2; explicit
// proof-level constants plus the unspecified-constant max-form arguments
BoundReport chaos_q_bound(const Kernel& f, double sigma2);

// Kolmogorov bound for J_1(f1) + J_2(f2) with unit total variance
BoundReport sum12_bound(const Kernel& f1, const Kernel& f2);

// E[J_2(f)^4] closed form for unit-variance f
double fourth_moment_J2(const Kernel& f);
// (E[F^4] - 3)/16 in contraction form; must vanish for asymptotic normality
double necessary_statistic(const Kernel& f);

// d_4 bound for a vector of centred functionals against N(0, cov)
BoundReport multivariate_bound(const std::vector<ChaosExpansion>& Fs, const CovarianceSpec& cov,
                               const ExpectationEngine& engine);

// same for a vector of pure integrals, assembled from contraction norms only
BoundReport multivariate_contraction_bound(const std::vector<Kernel>& fs,
                                           const CovarianceSpec& cov);

// ingredient of the Kolmogorov-bound proof for pure chaos:
// E[(1 - (1/q)||DF||^2)^2] and the ell^4 gradient bound, in contraction form
double gradient_variance_identity(const Kernel& f);  // uses symmetrized restricted norms
double gradient_l4_bound(const Kernel& f);           // upper bound on E[||DF||_{l4}^4]

}  // namespace radstein
