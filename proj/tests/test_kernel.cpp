#include <doctest.h>

#include <cmath>

#include "radstein/verify.hpp"

using namespace radstein;

namespace {

// two-coordinate star kernel: f(1,k) = 1/(2 sqrt(n-1)) for k = 2..n
Kernel star_kernel(int n) {
    Kernel f(2);
    const double v = 0.5 / std::sqrt(n - 1.0);
    for (Index k = 2; k <= n; ++k) f.set({1, k}, v);
    return f;
}

}  // namespace

TEST_CASE("kernel storage is canonical and diagonal-free") {
    Kernel f(2);
    f.set({2, 1}, 0.5);
    CHECK(f.value({1, 2}) == 0.5);
    CHECK(f.value({2, 1}) == 0.5);
    CHECK(f.support_size() == 1);
    CHECK_THROWS_AS(f.set({3, 3}, 1.0), std::invalid_argument);
    CHECK(f.value({3, 3}) == 0.0);
    CHECK(f.max_index() == 2);
}

TEST_CASE("norms use the ordered-tuple convention") {
    Kernel f(2);
    f.set({1, 2}, 0.5);
    CHECK(f.norm2() * f.norm2() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f.norm4() == doctest::Approx(2.0 / 16.0).epsilon(1e-14));
    Kernel g(2);
    g.set({1, 2}, 2.0);
    CHECK(Kernel::inner(f, g) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("star kernel contraction values match the closed forms") {
    for (int n : {3, 5, 9, 20}) {
        Kernel f = star_kernel(n);
        CHECK(f.norm2() * f.norm2() == doctest::Approx(0.5).epsilon(1e-13));
        MultiIndexTable c = contract(f, f, 1, 1);
        CHECK(c.value({1, 1}) == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(c.value({2, 2}) == doctest::Approx(0.25 / (n - 1.0)).epsilon(1e-13));
        const double full = norm2(c);
        CHECK(full * full == doctest::Approx(0.125).epsilon(1e-12));
        const double on = norm2(restrict(c, DiagonalMask(2), true));
        CHECK(on * on == doctest::Approx((n - 2.0) / (16.0 * (n - 1.0))).epsilon(1e-12));
    }
}

TEST_CASE("tensor contraction r=l=0 is the plain product") {
    Kernel f(1), g(1);
    f.set({1}, 2.0);
    g.set({2}, 3.0);
    MultiIndexTable t = contract(f, g, 0, 0);
    CHECK(t.value({1, 2}) == doctest::Approx(6.0));
    CHECK(t.size() == 1);
}

TEST_CASE("Taqqu identity holds on random kernels") {
    CounterRng rng(11, 0);
    for (int c = 0; c < 10; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        Kernel f = random_kernel(q, 6, 4, rng);
        TaqquCheck tc = taqqu_check(f);
        CHECK(tc.lhs == doctest::Approx(tc.rhs).epsilon(1e-10));
    }
}

TEST_CASE("star relations hold on random kernels") {
    CounterRng rng(12, 0);
    for (int c = 0; c < 10; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        Kernel f = random_kernel(q, 6, 4, rng);
        CHECK(star_relations_check(f).ok(1e-10));
    }
}

TEST_CASE("contraction norm duality matches the direct computation") {
    CounterRng rng(13, 0);
    for (int c = 0; c < 10; ++c) {
        const int q = 2 + static_cast<int>(rng.next_u64() % 2);
        const int p = 2 + static_cast<int>(rng.next_u64() % 2);
        Kernel f = random_kernel(q, 6, 4, rng);
        Kernel g = random_kernel(p, 6, 4, rng);
        for (int r = 1; r <= std::min(q, p); ++r) {
            MultiIndexTable direct = contract(f, g, r, r);
            const double dn = norm2(direct);
            CHECK(contraction_norm2_rr(f, g, r) == doctest::Approx(dn * dn).epsilon(1e-10));
        }
    }
}

TEST_CASE("self contractions share the norm with the complementary order") {
    CounterRng rng(14, 0);
    Kernel f = random_kernel(3, 6, 5, rng);
    const double n1 = norm2(contract(f, f, 1, 1));
    const double n2 = norm2(contract(f, f, 2, 2));
    CHECK(n1 == doctest::Approx(n2).epsilon(1e-12));
}

TEST_CASE("mixed contraction norms obey the domination estimates") {
    CounterRng rng(15, 0);
    for (int c = 0; c < 30; ++c) {
        const int p = 2 + static_cast<int>(rng.next_u64() % 2);
        const int q = p + static_cast<int>(rng.next_u64() % 2);
        Kernel f = random_kernel(p, 6, 4, rng);
        Kernel g = random_kernel(q, 6, 4, rng);
        for (int r = 1; r < p; ++r) {
            const double mixed = std::sqrt(contraction_norm2_rr(f, g, r));
            const double a = std::sqrt(contraction_norm2_rr(f, f, p - r));
            const double b = std::sqrt(contraction_norm2_rr(g, g, q - r));
            CHECK(mixed <= std::max(a, b) + 1e-10);
        }
        if (p < q) {
            const double lhs = std::sqrt(contraction_norm2_rr(f, g, p));
            const double rhs =
                f.norm2() * std::sqrt(std::sqrt(contraction_norm2_rr(g, g, q - p)));
            CHECK(lhs <= rhs + 1e-10);
        }
    }
}

TEST_CASE("kernel JSON round trip") {
    Kernel f = star_kernel(5);
    Kernel g = kernel_from_json(kernel_to_json(f));
    CHECK(g.order() == 2);
    CHECK(g.support_size() == f.support_size());
    CHECK(g.value({1, 3}) == doctest::Approx(f.value({1, 3})));
}

TEST_CASE("kernel_from_table rejects diagonal mass") {
    MultiIndexTable t(2);
    t.set({1, 1}, 0.5);
    CHECK_THROWS_AS(kernel_from_table(t), std::invalid_argument);
}
