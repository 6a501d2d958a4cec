#include "radstein/verify.hpp"

#include <cmath>

namespace radstein {

Kernel random_kernel(int order, int n, int support, CounterRng& rng) {
    if (n < order) throw std::invalid_argument("random_kernel: need n >= order");
    Kernel f(order);
    for (int s = 0; s < support; ++s) {
        Tuple t;
        while (static_cast<int>(t.size()) < order) {
            const Index i = static_cast<Index>(1 + rng.next_u64() % n);
            if (std::find(t.begin(), t.end(), i) == t.end()) t.push_back(i);
        }
        f.set(t, 2.0 * rng.next_double() - 1.0);
    }
    if (f.support_size() == 0) {
        Tuple t(order);
        for (int i = 0; i < order; ++i) t[i] = i + 1;
        f.set(t, 1.0);
    }
    return f;
}

namespace {

double pointwise_residual(const ChaosExpansion& A, const Evaluator& B, int n) {
    double worst = 0.0;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        RademacherPoint x = RademacherPoint::from_bits(n, bits);
        worst = std::max(worst, std::abs(evaluate(A, x) - B(x)));
    }
    return worst;
}

}  // namespace

IdentityReport run_identity_suite(std::uint64_t seed, int cases, int max_n) {
    if (cases < 1 || max_n < 4 || max_n > 16)
        throw std::invalid_argument("run_identity_suite: need cases >= 1 and 4 <= max_n <= 16");
    IdentityReport agg;
    auto bump = [&](const std::string& name, double r) {
        for (auto& [k, v] : agg.residuals)
            if (k == name) { v = std::max(v, r); return; }
        agg.residuals.emplace_back(name, r);
    };
    const ExpectationEngine exact = ExpectationEngine::exact();

    for (int c = 0; c < cases; ++c) {
        CounterRng rng(seed, static_cast<std::uint64_t>(c));
        const int n = 4 + static_cast<int>(rng.next_u64() % (max_n - 3));
        const int q = 1 + static_cast<int>(rng.next_u64() % 3);
        const int p = 1 + static_cast<int>(rng.next_u64() % 3);
        Kernel f = random_kernel(q, n, 4, rng);
        Kernel g = random_kernel(p, n, 4, rng);
        ChaosExpansion F = pure_chaos(n, f);
        ChaosExpansion G = pure_chaos(n, g);

        // isometry: E[J_q(f) J_p(g)] = 1{q=p} q! <f, g>
        Evaluator prod = [&F, &G](const RademacherPoint& x) {
            return evaluate(F, x) * evaluate(G, x);
        };
        const double e2 = expectation(prod, n, exact).value;
        const double iso = (q == p) ? factorial(q) * Kernel::inner(f, g) : 0.0;
        bump("isometry", std::abs(e2 - iso));

        // multiplication formula, pointwise
        ChaosExpansion FG = chaos_multiply(F, G);
        bump("multiplication", pointwise_residual(FG, prod, n));

        if (q >= 2) {
            TaqquCheck tc = taqqu_check(f);
            // relative residual: both sides carry a (2q)! scale
            const double scale = std::max({1.0, std::abs(tc.lhs), std::abs(tc.rhs)});
            bump("taqqu", std::abs(tc.lhs - tc.rhs) / scale);
            StarRelations sr = star_relations_check(f);
            double res = std::abs(sr.norm_10 - sr.norm_q_qm1);
            for (std::size_t i = 0; i < sr.norm_r_rm1.size(); ++i)
                res = std::max(res, std::max(0.0, sr.norm_r_rm1[i] - sr.norm_rm1_rm1[i]));
            bump("star_relations", res);
        }

        // Stroock round-trip through exact decomposition
        ChaosExpansion Fc = F;
        Fc.set_constant(2.0 * rng.next_double() - 1.0);
        ChaosExpansion back = decompose(as_evaluator(Fc), n, Fc.degree());
        bump("stroock", pointwise_residual(back, as_evaluator(Fc), n));

        // Malliavin identities with u = DG
        IdentityReport rep = identity_checks(F, G, gradient(G), exact);
        for (const auto& [name, r] : rep.residuals) bump(name, r);
    }
    return agg;
}

}  // namespace radstein
