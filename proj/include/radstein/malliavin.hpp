#pragma once

#include "radstein/engine.hpp"

namespace radstein {

// sequence k -> D_k F of chaos expansions, k = 1..dimension
class GradientField {
  public:
    explicit GradientField(int dimension)
        : dimension_(dimension), components_(dimension, ChaosExpansion(dimension)) {
        if (dimension < 0) throw std::invalid_argument("GradientField: negative dimension");
    }
    int dimension() const { return dimension_; }
    const ChaosExpansion& component(int k) const {  // 1-based
        if (k < 1 || k > dimension_) throw std::invalid_argument("GradientField: index out of range");
        return components_[k - 1];
    }
    void set_component(int k, const ChaosExpansion& u) {
        if (k < 1 || k > dimension_) throw std::invalid_argument("GradientField: index out of range");
        if (u.dimension() != dimension_)
            throw std::invalid_argument("GradientField: component dimension mismatch");
        components_[k - 1] = u;
    }
  private:
    int dimension_;
    std::vector<ChaosExpansion> components_;
};

// D_k J_q(f) = q J_{q-1}(f(., k)); constants map to the zero field
GradientField gradient(const ChaosExpansion& F);

// D'_k G = (G(x with x_k=+1) - G(x with x_k=-1)) / 2
double gradient_pathwise(const Evaluator& G, const RademacherPoint& x, int k);

// pathwise divergence: delta(u)(x) = sum_k u_k(x) x_k - sum_k (D_k u_k)(x)
Evaluator divergence(const GradientField& u);

// kernel-level divergence J_{m+1}(sym u); requires the symmetrized kernels to be
// diagonal-free (throws otherwise); must agree pointwise with the pathwise form
ChaosExpansion divergence_expansion(const GradientField& u);

// Ornstein-Uhlenbeck generator L: J_n -> -n J_n, and pseudo-inverse L^{-1}: J_n -> -(1/n) J_n
ChaosExpansion ou(const ChaosExpansion& F);
ChaosExpansion ou_inverse(const ChaosExpansion& F);

struct IdentityReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual() const {
        double m = 0.0;
        for (const auto& [name, r] : residuals) m = std::max(m, r);
        return m;
    }
    bool ok(double tol = 1e-10) const { return max_residual() <= tol; }
};

// verifies, by exact enumeration: integration by parts, the divergence isometry,
// the gradient product rule, the iterated-gradient moment formula, and the
// independent-direction integration-by-parts lemma on an indicator functional
IdentityReport identity_checks(const ChaosExpansion& F, const ChaosExpansion& G,
                               const GradientField& u, const ExpectationEngine& engine);

}  // namespace radstein
