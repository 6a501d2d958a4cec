#include <doctest.h>

#include <cmath>

#include "radstein/verify.hpp"

using namespace radstein;

namespace {

constexpr double kQuarterSqrt2Pi = 0.62665706865775006;  // sqrt(2*pi)/4

double stein_rhs(double x, double z) { return (z <= x ? 1.0 : 0.0) - normal_cdf(x); }

}  // namespace

TEST_CASE("normal CDF reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
    CHECK(normal_cdf(5.0) + normal_cdf(-5.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("scaled complementary error function") {
    CHECK(erfcx(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(erfcx(1.0) == doctest::Approx(0.42758357615580705).epsilon(1e-12));
    // asymptotic bracket 1/(sqrt(pi)(t + 1/t)) < erfcx(t) < 1/(sqrt(pi) t)
    for (double t : {2.0, 10.0, 50.0}) {
        const double v = erfcx(t);
        CHECK(v < 1.0 / (std::sqrt(M_PI) * t));
        CHECK(v > 1.0 / (std::sqrt(M_PI) * (t + 1.0 / t)));
    }
}

TEST_CASE("Stein solution value and bounds") {
    CHECK(stein_solution(0.0, 0.0) == doctest::Approx(kQuarterSqrt2Pi).epsilon(1e-12));
    for (int i = 0; i <= 40; ++i) {
        const double x = -4.0 + 0.2 * i;
        for (int j = 0; j <= 40; ++j) {
            const double z = -4.0 + 0.2 * j + 0.013;  // keep away from the kink at z = x
            const double f = stein_solution(x, z);
            CHECK(f > 0.0);
            CHECK(f <= kQuarterSqrt2Pi + 1e-12);
            CHECK(std::abs(stein_solution_derivative(x, z)) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("Stein solution solves the equation (numerical derivative)") {
    const double h = 1e-5;
    for (double x : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
        for (int j = 0; j <= 30; ++j) {
            const double z = -3.0 + 0.2 * j + 0.0137;
            if (std::abs(z - x) < 3 * h) continue;
            const double num =
                (stein_solution(x, z + h) - stein_solution(x, z - h)) / (2.0 * h);
            const double resid = num - z * stein_solution(x, z) - stein_rhs(x, z);
            CHECK(std::abs(resid) <= 1e-8);
            CHECK(num == doctest::Approx(stein_solution_derivative(x, z)).epsilon(1e-6));
        }
    }
}

TEST_CASE("exact Kolmogorov distance for simple laws") {
    AtomicDistribution point({{0.0, 1.0}});
    CHECK(exact_dK(point, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    AtomicDistribution pm({{-1.0, 0.5}, {1.0, 0.5}});
    CHECK(exact_dK(pm, 1.0) == doctest::Approx(0.3413447460685429).epsilon(1e-12));
}

TEST_CASE("weighted sum law is the exact convolution") {
    AtomicDistribution law = weighted_sum_law({1.0, 1.0});
    REQUIRE(law.size() == 3);
    CHECK(law.atoms()[0].first == doctest::Approx(-2.0));
    CHECK(law.atoms()[0].second == doctest::Approx(0.25));
    CHECK(law.atoms()[1].second == doctest::Approx(0.5));
    AtomicDistribution excl = weighted_sum_law_excluding({1.0, 2.0, 3.0}, 3);
    CHECK(excl.cdf(3.0) == doctest::Approx(1.0));
    CHECK(excl.mass_at(-3.0) == doctest::Approx(0.25));
}

TEST_CASE("small ball probability of the leave-one-out sum") {
    auto g = small_ball({1.0, 1.0}, 1, ExpectationEngine::exact());
    CHECK(g(0.0) == doctest::Approx(0.5));   // P(-1 < X_2 <= 1)
    CHECK(g(0.5) == doctest::Approx(0.5));   // P(-0.5 < X_2 <= 1.5) = P(X_2 = 1)
    CHECK(g(5.0) == doctest::Approx(0.0));
}

TEST_CASE("small ball supremum matches a dense-grid brute force") {
    CounterRng rng(41, 0);
    for (int c = 0; c < 5; ++c) {
        std::vector<double> a(6);
        for (double& v : a) v = 0.2 + rng.next_double();
        SmallBallSup sup = small_ball_sup(a, ExpectationEngine::exact());

        std::vector<AtomicDistribution> laws;
        for (int k = 1; k <= 6; ++k) laws.push_back(weighted_sum_law_excluding(a, k));
        std::vector<double> grid;
        for (int k = 0; k < 6; ++k)
            for (const auto& [x, p] : laws[k].atoms()) {
                grid.push_back(x - std::abs(a[k]));
                grid.push_back(x + std::abs(a[k]));
            }
        std::sort(grid.begin(), grid.end());
        std::vector<double> probes = grid;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            probes.push_back(0.5 * (grid[i] + grid[i + 1]));
        probes.push_back(grid.front() - 1.0);
        probes.push_back(grid.back() + 1.0);
        double best = 0.0;
        for (double x : probes) {
            double s = 0.0;
            for (int k = 0; k < 6; ++k)
                s += a[k] * a[k] * laws[k].interval(x - std::abs(a[k]), x + std::abs(a[k]));
            best = std::max(best, s);
        }
        CHECK(sup.value == doctest::Approx(best).epsilon(1e-12));
        CHECK(sup.candidates > 0);
    }
}

TEST_CASE("empirical KS statistic against the normal with DKW band") {
    std::vector<double> samples;
    for (int i = 0; i < 5000; ++i) {
        samples.push_back(-1.0);
        samples.push_back(1.0);
    }
    EmpiricalDk dk = empirical_dK(samples, 1.0);
    CHECK(dk.estimate == doctest::Approx(0.3413447460685429).epsilon(1e-9));
    CHECK(dk.dkw_band == doctest::Approx(std::sqrt(std::log(200.0) / 20000.0)).epsilon(1e-12));
}
