#include <doctest.h>

#include <cmath>

#include "radstein/verify.hpp"

using namespace radstein;

namespace {

Kernel star_kernel(int n) {
    Kernel f(2);
    const double v = 0.5 / std::sqrt(n - 1.0);
    for (Index k = 2; k <= n; ++k) f.set({1, k}, v);
    return f;
}

Kernel unit_variance(Kernel f) {
    const double var = factorial(f.order()) * f.norm2() * f.norm2();
    f.scale(1.0 / std::sqrt(var));
    return f;
}

ChaosExpansion random_mixed(int n, CounterRng& rng) {
    ChaosExpansion F(n, 0.0);
    F.add_term(random_kernel(1, n, 3, rng));
    F.add_term(random_kernel(2, n, 4, rng));
    return F;
}

ChaosExpansion normalized(ChaosExpansion F) {
    const double m2 = moment(F, 2, ExpectationEngine::exact()).value;
    F.scale(1.0 / std::sqrt(m2));
    return F;
}

// dense-grid value of the indicator-sweep supremum term
double brute_A4(const ChaosExpansion& F) {
    const int n = F.dimension();
    GradientField DF = gradient(F);
    ChaosExpansion m = ou_inverse(F);
    m.scale(-1.0);
    GradientField B = gradient(m);
    const double w = 1.0 / static_cast<double>(1ull << n);

    std::vector<double> breakpoints;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        RademacherPoint x = RademacherPoint::from_bits(n, bits);
        const double Fv = evaluate(F, x);
        for (int k = 1; k <= n; ++k) {
            const double d = evaluate(DF.component(k), x);
            breakpoints.push_back(Fv + (1.0 - x[k]) * d);
            breakpoints.push_back(Fv - (1.0 + x[k]) * d);
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> probes = breakpoints;
    probes.push_back(breakpoints.front() - 1.0);
    probes.push_back(breakpoints.back() + 1.0);

    double sup = 0.0;
    for (double t : probes) {
        double h = 0.0;
        for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            const double Fv = evaluate(F, x);
            for (int k = 1; k <= n; ++k) {
                const double d = evaluate(DF.component(k), x);
                const double b = evaluate(B.component(k), x);
                const double fp = Fv + (1.0 - x[k]) * d;
                const double fm = Fv - (1.0 + x[k]) * d;
                h += 0.5 * w * d * std::abs(b) *
                     ((fp > t ? 1.0 : 0.0) - (fm > t ? 1.0 : 0.0));
            }
        }
        sup = std::max(sup, h);
    }
    return 2.0 * sup;
}

}  // namespace

TEST_CASE("first chaos bound on equal weights") {
    BoundReport r = first_chaos_bound({0.5, 0.5, 0.5, 0.5});
    CHECK(r.get("cubic_term") == doctest::Approx(1.0));
    const double dk = exact_dK(weighted_sum_law({0.5, 0.5, 0.5, 0.5}), 1.0);
    CHECK(dk <= r.total + 1e-12);
}

TEST_CASE("abstract terms vanish where the theory says they do") {
    // pure first chaos with unit variance: <DF, -DL^{-1}F> = ||a||^2 = 1
    Kernel a(1);
    for (Index k = 1; k <= 4; ++k) a.set({k}, 0.5);
    ChaosExpansion F = pure_chaos(4, a);
    BoundReport r = malliavin_stein_terms(F, ExpectationEngine::exact());
    CHECK(r.get("A1") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.get("corollary_A1") == doctest::Approx(0.0).epsilon(1e-12));
    const double dk = exact_dK(exact_law(as_evaluator(F), 4), 1.0);
    CHECK(dk <= r.total + 1e-12);
    CHECK(dk <= r.get("corollary_total") + 1e-12);
}

TEST_CASE("indicator-sweep supremum matches a dense-grid brute force") {
    CounterRng rng(51, 0);
    for (int c = 0; c < 3; ++c) {
        ChaosExpansion F = normalized(random_mixed(5, rng));
        BoundReport r = malliavin_stein_terms(F, ExpectationEngine::exact());
        CHECK(r.get("A4") == doctest::Approx(brute_A4(F)).epsilon(1e-12));
    }
}

TEST_CASE("abstract bound dominates the exact Kolmogorov distance") {
    CounterRng rng(52, 0);
    for (int c = 0; c < 5; ++c) {
        const int n = 6;
        ChaosExpansion F = normalized(random_mixed(n, rng));
        BoundReport r = malliavin_stein_terms(F, ExpectationEngine::exact());
        const double dk = exact_dK(exact_law(as_evaluator(F), n), 1.0);
        CHECK(dk <= r.total + 1e-12);
        CHECK(dk <= r.get("corollary_total") + 1e-12);
    }
}

TEST_CASE("second chaos contraction bound on the star kernel") {
    const int n = 8;
    Kernel f = star_kernel(n);
    BoundReport r = chaos_q_bound(f, 1.0);
    CHECK(r.get("variance_gap") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.get("contract_1_full") == doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
    CHECK(r.get("contract_1_ondiag") ==
          doctest::Approx(std::sqrt((n - 2.0) / (16.0 * (n - 1.0)))).epsilon(1e-12));
    const double dk = exact_dK(exact_law(as_evaluator(pure_chaos(n, f)), n), 1.0);
    CHECK(dk <= r.total + 1e-12);
}

TEST_CASE("restricted contraction norms never exceed the full ones") {
    CounterRng rng(53, 0);
    for (int c = 0; c < 5; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        Kernel f = unit_variance(random_kernel(q, 7, 5, rng));
        BoundReport r = chaos_q_bound(f, 1.0);
        for (int rr = 1; rr <= q - 1; ++rr) {
            const std::string s = std::to_string(rr);
            CHECK(r.get("contract_" + s + "_ondiag") <= r.get("contract_" + s + "_full") + 1e-12);
        }
        CHECK(r.get("C1_max_arg") <= r.total + 1e-9);
    }
}

TEST_CASE("contraction bound dominates the exact distance for pure chaos") {
    CounterRng rng(54, 0);
    for (int c = 0; c < 6; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        const int n = 8;
        Kernel f = unit_variance(random_kernel(q, n, 5, rng));
        BoundReport r = chaos_q_bound(f, 1.0);
        const double dk = exact_dK(exact_law(as_evaluator(pure_chaos(n, f)), n), 1.0);
        CHECK(dk <= r.total + 1e-12);
    }
}

TEST_CASE("gradient variance identity matches exact enumeration") {
    CounterRng rng(55, 0);
    for (int c = 0; c < 6; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        const int n = 6;
        Kernel f = random_kernel(q, n, 4, rng);
        ChaosExpansion F = pure_chaos(n, f);
        GradientField D = gradient(F);
        double s = 0.0;
        const double w = 1.0 / static_cast<double>(1u << n);
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            double df2 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double d = evaluate(D.component(k), x);
                df2 += d * d;
            }
            const double g = 1.0 - df2 / q;
            s += w * g * g;
        }
        CHECK(gradient_variance_identity(f) == doctest::Approx(s).epsilon(1e-10));
    }
}

TEST_CASE("gradient l4 bound dominates the exact fourth-power sum") {
    CounterRng rng(56, 0);
    for (int c = 0; c < 6; ++c) {
        const int q = 1 + static_cast<int>(rng.next_u64() % 3);
        const int n = 6;
        Kernel f = random_kernel(q, n, 4, rng);
        ChaosExpansion F = pure_chaos(n, f);
        GradientField D = gradient(F);
        double s = 0.0;
        const double w = 1.0 / static_cast<double>(1u << n);
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            for (int k = 1; k <= n; ++k) {
                const double d = evaluate(D.component(k), x);
                s += w * d * d * d * d;
            }
        }
        const double bound = gradient_l4_bound(f);
        CHECK(s <= bound + 1e-10);
        if (q == 1) CHECK(bound == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("fourth moment closed form matches exact enumeration") {
    CounterRng rng(57, 0);
    for (int c = 0; c < 8; ++c) {
        const int n = 7;
        Kernel f = unit_variance(random_kernel(2, n, 5, rng));
        ChaosExpansion F = pure_chaos(n, f);
        const double m4 = moment(F, 4, ExpectationEngine::exact()).value;
        CHECK(fourth_moment_J2(f) == doctest::Approx(m4).epsilon(1e-10));
        const double k4 = kappa4(F, ExpectationEngine::exact()).value;
        CHECK(necessary_statistic(f) == doctest::Approx(k4 / 16.0).epsilon(1e-10));
    }
}

TEST_CASE("necessary statistic closed forms") {
    Kernel f(2);
    f.set({1, 2}, 0.5);
    CHECK(fourth_moment_J2(f) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(necessary_statistic(f) == doctest::Approx(-0.125).epsilon(1e-14));
    for (int n : {3, 10, 25}) {
        CHECK(necessary_statistic(star_kernel(n)) ==
              doctest::Approx(-1.0 / (8.0 * (n - 1.0))).epsilon(1e-12));
    }
}

TEST_CASE("mixed 1+2 bound reduces correctly when the second kernel vanishes") {
    Kernel f1(1);
    for (Index k = 1; k <= 4; ++k) f1.set({k}, 0.5);
    Kernel f2(2);
    BoundReport r = sum12_bound(f1, f2);
    CHECK(r.get("cross_contraction") == doctest::Approx(0.0));
    CHECK(r.get("first_l4") == doctest::Approx(1.0));
    CHECK(r.get("influence_cubes") == doctest::Approx(1.0));
    CHECK(r.total == doctest::Approx(2.0));
}

TEST_CASE("mixed 1+2 bound dominates the exact distance") {
    CounterRng rng(58, 0);
    for (int c = 0; c < 5; ++c) {
        const int n = 6;
        Kernel f1 = random_kernel(1, n, 3, rng);
        Kernel f2 = random_kernel(2, n, 4, rng);
        const double var = f1.norm2() * f1.norm2() + 2.0 * f2.norm2() * f2.norm2();
        f1.scale(1.0 / std::sqrt(var));
        f2.scale(1.0 / std::sqrt(var));
        BoundReport r = sum12_bound(f1, f2);
        ChaosExpansion F(n, 0.0);
        F.set_term(f1);
        F.set_term(f2);
        const double dk = exact_dK(exact_law(as_evaluator(F), n), 1.0);
        CHECK(dk <= r.total + 1e-12);
    }
}

TEST_CASE("covariance validation") {
    CovarianceSpec ok = CovarianceSpec::identity(2);
    ok.validate();
    CovarianceSpec bad = CovarianceSpec::identity(2);
    bad.sigma[0][1] = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.sigma[1][0] = 0.5;
    bad.validate();  // PSD with off-diagonal 0.5
    bad.sigma[0][1] = bad.sigma[1][0] = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("multivariate distance bound on two independent coordinates") {
    Kernel a(1), b(1);
    a.set({1}, 1.0);
    b.set({2}, 1.0);
    std::vector<ChaosExpansion> Fs = {pure_chaos(2, a), pure_chaos(2, b)};
    BoundReport r = multivariate_bound(Fs, CovarianceSpec::identity(2),
                                       ExpectationEngine::exact());
    CHECK(r.get("term1") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.get("term2") == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("contraction form dominates the enumerated multivariate terms") {
    CounterRng rng(59, 0);
    for (int c = 0; c < 4; ++c) {
        const int n = 6;
        std::vector<Kernel> fs = {random_kernel(2, n, 4, rng), random_kernel(2, n, 4, rng)};
        CovarianceSpec cov;
        cov.d = 2;
        cov.sigma.assign(2, std::vector<double>(2, 0.0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                cov.sigma[i][j] = 2.0 * Kernel::inner(fs[i], fs[j]);  // exact Gram matrix
        std::vector<ChaosExpansion> Fs = {pure_chaos(n, fs[0]), pure_chaos(n, fs[1])};
        BoundReport exact = multivariate_bound(Fs, cov, ExpectationEngine::exact());
        BoundReport contr = multivariate_contraction_bound(fs, cov);
        CHECK(exact.get("term1") <= contr.get("term1") + 1e-10);
    }
}

TEST_CASE("contraction variance term uses the isometry factorial") {
    CounterRng rng(60, 0);
    Kernel f = random_kernel(3, 6, 5, rng);
    CovarianceSpec cov;
    cov.d = 1;
    cov.sigma = {{6.0 * Kernel::inner(f, f)}};
    BoundReport r = multivariate_contraction_bound({f}, cov);
    double V = 0.0;  // gap vanishes for the exact variance
    for (int rr = 1; rr <= 2; ++rr) {
        const double b = binomial(2, rr - 1);
        V += 9.0 * factorial(rr - 1) * factorial(rr - 1) * b * b * b * b *
             factorial(2 * (3 - rr)) * contraction_norm2_rr(f, f, rr);
    }
    CHECK(r.get("term1") == doctest::Approx(0.5 * std::sqrt(V)).epsilon(1e-12));
}
