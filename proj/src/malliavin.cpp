#include "radstein/malliavin.hpp"

#include <cmath>

namespace radstein {

GradientField gradient(const ChaosExpansion& F) {
    const int n = F.dimension();
    GradientField D(n);
    // per-k accumulation: D_k J_q(f) = q J_{q-1}(f(., k)), D_k J_1(a) = a_k
    std::vector<ChaosExpansion> comps(n, ChaosExpansion(n));
    for (const auto& [q, f] : F.terms()) {
        std::vector<Kernel> reduced(n, Kernel(std::max(q - 1, 1)));
        std::vector<double> firsts(n, 0.0);
        for (const auto& [t, v] : f.canonical()) {
            for (int pos = 0; pos < q; ++pos) {
                const Index k = t[pos];
                if (q == 1) {
                    firsts[k - 1] += v;
                } else {
                    Tuple s;
                    s.reserve(q - 1);
                    for (int i = 0; i < q; ++i)
                        if (i != pos) s.push_back(t[i]);
                    reduced[k - 1].add(s, static_cast<double>(q) * v);
                }
            }
        }
        for (int k = 1; k <= n; ++k) {
            if (q == 1)
                comps[k - 1].set_constant(comps[k - 1].constant() + firsts[k - 1]);
            else if (reduced[k - 1].support_size() > 0)
                comps[k - 1].add_term(reduced[k - 1]);
        }
    }
    for (int k = 1; k <= n; ++k) D.set_component(k, comps[k - 1]);
    return D;
}

double gradient_pathwise(const Evaluator& G, const RademacherPoint& x, int k) {
    return 0.5 * (G(flip(x, k, +1)) - G(flip(x, k, -1)));
}

Evaluator divergence(const GradientField& u) {
    const int n = u.dimension();
    std::vector<Evaluator> comps;
    comps.reserve(n);
    for (int k = 1; k <= n; ++k) comps.push_back(as_evaluator(u.component(k)));
    return [n, comps](const RademacherPoint& x) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k)
            s += comps[k - 1](x) * x[k] - gradient_pathwise(comps[k - 1], x, k);
        return s;
    };
}

ChaosExpansion divergence_expansion(const GradientField& u) {
    const int n = u.dimension();
    ChaosExpansion out(n);
    // collect orders present across components
    std::map<int, bool> orders;
    bool any_constant = false;
    for (int k = 1; k <= n; ++k) {
        if (u.component(k).constant() != 0.0) any_constant = true;
        for (const auto& [m, g] : u.component(k).terms()) orders[m] = true;
    }
    if (any_constant) {
        Kernel a(1);
        for (int k = 1; k <= n; ++k) a.add({k}, u.component(k).constant());
        if (a.support_size() > 0) out.add_term(a);
    }
    for (const auto& [m, dummy] : orders) {
        MultiIndexTable h(m + 1);
        for (int k = 1; k <= n; ++k) {
            const Kernel* g = u.component(k).term(m);
            if (!g) continue;
            MultiIndexTable full = g->expand();
            for (const auto& [t, v] : full.entries()) {
                Tuple tk = t;
                tk.push_back(k);
                h.add(tk, v);
            }
        }
        if (h.empty()) continue;
        Kernel tilde = kernel_from_table(symmetrize(h));  // throws on diagonal mass
        if (tilde.support_size() > 0) out.add_term(tilde);
    }
    return out;
}

ChaosExpansion ou(const ChaosExpansion& F) {
    ChaosExpansion out(F.dimension());
    for (const auto& [q, f] : F.terms()) {
        Kernel g = f;
        g.scale(-static_cast<double>(q));
        out.set_term(g);
    }
    return out;
}

ChaosExpansion ou_inverse(const ChaosExpansion& F) {
    if (F.constant() != 0.0)
        throw std::invalid_argument("ou_inverse: expansion must be centred");
    ChaosExpansion out(F.dimension());
    for (const auto& [q, f] : F.terms()) {
        Kernel g = f;
        g.scale(-1.0 / static_cast<double>(q));
        out.set_term(g);
    }
    return out;
}

namespace {

// iterated pathwise gradient over a tuple: signed average of 2^m half flips
double iterated_gradient(const Evaluator& G, const RademacherPoint& x, const Tuple& ks) {
    const int m = static_cast<int>(ks.size());
    double s = 0.0;
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
        RademacherPoint y = x;
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            const int si = (bits >> i) & 1 ? 1 : -1;
            y.set(ks[i], si);
            sign *= si;
        }
        s += sign * G(y);
    }
    return s / static_cast<double>(1ull << m);
}

}  // namespace

IdentityReport identity_checks(const ChaosExpansion& F, const ChaosExpansion& G,
                               const GradientField& u, const ExpectationEngine& engine) {
    const int n = std::max({F.dimension(), G.dimension(), u.dimension()});
    if (n > engine.cap)
        throw std::runtime_error("identity_checks: dimension exceeds exact cap");
    const std::uint64_t total = 1ull << n;

    Evaluator Fe = as_evaluator(F), Ge = as_evaluator(G);
    std::vector<Evaluator> ue;
    for (int k = 1; k <= u.dimension(); ++k) ue.push_back(as_evaluator(u.component(k)));
    Evaluator du = divergence(u);
    GradientField DF = gradient(F), DG = gradient(G);

    IdentityReport rep;

    // 1) integration by parts: E[F delta(u)] = E[<DF, u>]
    {
        double lhs = 0.0, rhs = 0.0;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            lhs += Fe(x) * du(x);
            double s = 0.0;
            for (int k = 1; k <= u.dimension(); ++k)
                s += evaluate(DF.component(k), x) * ue[k - 1](x);
            rhs += s;
        }
        rep.residuals.emplace_back("integration_by_parts", std::abs(lhs - rhs) / total);
    }

    // 2) divergence isometry: E[delta(u)^2] = E[||u||^2] + E[sum_{k,l} (D_k u_l)(D_l u_k)]
    {
        double lhs = 0.0, rhs = 0.0;
        const int m = u.dimension();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            const double d = du(x);
            lhs += d * d;
            double s = 0.0;
            for (int k = 1; k <= m; ++k) s += ue[k - 1](x) * ue[k - 1](x);
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l)
                    s += gradient_pathwise(ue[l - 1], x, k) * gradient_pathwise(ue[k - 1], x, l);
            rhs += s;
        }
        rep.residuals.emplace_back("divergence_isometry", std::abs(lhs - rhs) / total);
    }

    // 3) product rule, pointwise: D_k(FG) = G D_kF + F D_kG - 2 x_k (D_kF)(D_kG)
    {
        Evaluator FG = [Fe, Ge](const RademacherPoint& x) { return Fe(x) * Ge(x); };
        double worst = 0.0;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            for (int k = 1; k <= n; ++k) {
                const double dF = evaluate(DF.component(k), x);
                const double dG = evaluate(DG.component(k), x);
                const double want = Ge(x) * dF + Fe(x) * dG - 2.0 * x[k] * dF * dG;
                worst = std::max(worst, std::abs(gradient_pathwise(FG, x, k) - want));
            }
        }
        rep.residuals.emplace_back("product_rule", worst);
    }

    // 4) iterated-gradient moments: E[(D')^m_{k_1..k_m} F] = E[F X_{k_1}...X_{k_m}]
    {
        double worst = 0.0;
        for (int m = 1; m <= std::min(3, n); ++m) {
            Tuple ks(m);
            for (int i = 0; i < m; ++i) ks[i] = i + 1;
            double lhs = 0.0, rhs = 0.0;
            for (std::uint64_t bits = 0; bits < total; ++bits) {
                RademacherPoint x = RademacherPoint::from_bits(n, bits);
                lhs += iterated_gradient(Fe, x, ks);
                double prod = Fe(x);
                for (Index k : ks) prod *= x[k];
                rhs += prod;
            }
            worst = std::max(worst, std::abs(lhs - rhs) / total);
        }
        rep.residuals.emplace_back("iterated_gradient_moment", worst);
    }

    // 5) independent-direction integration by parts on an indicator:
    //    H = 1{F > t}, v_k = (D_kF)|D_kF| (independent of X_k, (D'_kH) v_k >= 0)
    {
        const double t = 0.1234567;
        Evaluator H = [Fe, t](const RademacherPoint& x) { return Fe(x) > t ? 1.0 : 0.0; };
        double lhs = 0.0, rhs = 0.0;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            double dv = 0.0, s = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double dF = evaluate(DF.component(k), x);
                const double vk = dF * std::abs(dF);
                dv += vk * x[k];  // D_k v_k = 0 since v_k does not involve X_k
                s += gradient_pathwise(H, x, k) * vk;
            }
            lhs += H(x) * dv;
            rhs += s;
        }
        rep.residuals.emplace_back("indicator_integration_by_parts", std::abs(lhs - rhs) / total);
    }

    return rep;
}

}  // namespace radstein
