#include <doctest.h>

#include <cmath>

#include "radstein/verify.hpp"

using namespace radstein;

TEST_CASE("pure chaos evaluation of a single product") {
    Kernel f(2);
    f.set({1, 2}, 0.5);
    ChaosExpansion F = pure_chaos(2, f);
    CHECK(evaluate(F, RademacherPoint::from_bits(2, 0b11)) == doctest::Approx(1.0));
    CHECK(evaluate(F, RademacherPoint::from_bits(2, 0b01)) == doctest::Approx(-1.0));
}

TEST_CASE("isometry of chaoses of equal and different orders") {
    CounterRng rng(21, 0);
    for (int c = 0; c < 8; ++c) {
        const int n = 6;
        const int q = 1 + static_cast<int>(rng.next_u64() % 3);
        const int p = 1 + static_cast<int>(rng.next_u64() % 3);
        Kernel f = random_kernel(q, n, 4, rng);
        Kernel g = random_kernel(p, n, 4, rng);
        Evaluator Ff = as_evaluator(pure_chaos(n, f));
        Evaluator Gg = as_evaluator(pure_chaos(n, g));
        Evaluator prod = [&](const RademacherPoint& x) { return Ff(x) * Gg(x); };
        const double ex = expectation(prod, n, ExpectationEngine::exact()).value;
        const double expected = (q == p) ? factorial(q) * Kernel::inner(f, g) : 0.0;
        CHECK(ex == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("variance of a pure chaos is q! times the squared norm") {
    CounterRng rng(22, 0);
    Kernel f = random_kernel(2, 6, 5, rng);
    ChaosExpansion F = pure_chaos(6, f);
    const double m2 = moment(F, 2, ExpectationEngine::exact()).value;
    CHECK(m2 == doctest::Approx(2.0 * f.norm2() * f.norm2()).epsilon(1e-12));
}

TEST_CASE("multiplication formula agrees pointwise with the product") {
    CounterRng rng(23, 0);
    for (int c = 0; c < 6; ++c) {
        const int n = 6;
        Kernel f = random_kernel(1 + static_cast<int>(rng.next_u64() % 2), n, 4, rng);
        Kernel g = random_kernel(1 + static_cast<int>(rng.next_u64() % 2), n, 4, rng);
        ChaosExpansion F = pure_chaos(n, f);
        ChaosExpansion G = pure_chaos(n, g);
        ChaosExpansion P = chaos_multiply(F, G);
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
            RademacherPoint x = RademacherPoint::from_bits(n, bits);
            CHECK(evaluate(P, x) ==
                  doctest::Approx(evaluate(F, x) * evaluate(G, x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("decomposition recovers an arbitrary functional pointwise") {
    const int n = 5;
    Evaluator G = [](const RademacherPoint& x) {
        double s = 0.0;
        for (int k = 1; k <= x.dimension(); ++k) s += k * x[k];
        return std::tanh(s) + 0.25 * x[1] * x[3];
    };
    ChaosExpansion F = decompose(G, n, n);
    for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
        RademacherPoint x = RademacherPoint::from_bits(n, bits);
        CHECK(evaluate(F, x) == doctest::Approx(G(x)).epsilon(1e-10));
    }
}

TEST_CASE("exact law of a single coordinate and its cumulants") {
    Kernel a(1);
    a.set({1}, 1.0);
    ChaosExpansion F = pure_chaos(1, a);
    AtomicDistribution law = exact_law(as_evaluator(F), 1);
    REQUIRE(law.size() == 2);
    CHECK(law.atoms()[0].first == doctest::Approx(-1.0));
    CHECK(law.atoms()[0].second == doctest::Approx(0.5));
    CHECK(kappa4(F, ExpectationEngine::exact()).value == doctest::Approx(-2.0));
}

TEST_CASE("Monte Carlo sampling is deterministic for a fixed seed") {
    Kernel f(2);
    f.set({1, 2}, 0.3);
    f.set({2, 3}, -0.4);
    Evaluator F = as_evaluator(pure_chaos(3, f));
    std::vector<double> a = mc_sample_values(F, 3, 10000, 42);
    std::vector<double> b = mc_sample_values(F, 3, 10000, 42);
    CHECK(a == b);
    std::vector<double> c = mc_sample_values(F, 3, 10000, 43);
    CHECK(a != c);
}

TEST_CASE("expansion JSON round trip") {
    Kernel f(2);
    f.set({1, 2}, 0.5);
    ChaosExpansion F(3, 1.5);
    F.set_term(f);
    ChaosExpansion G = expansion_from_json(expansion_to_json(F));
    CHECK(G.dimension() == 3);
    CHECK(G.constant() == doctest::Approx(1.5));
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        RademacherPoint x = RademacherPoint::from_bits(3, bits);
        CHECK(evaluate(G, x) == doctest::Approx(evaluate(F, x)));
    }
}
