#pragma once

#include <functional>

#include "radstein/chaos.hpp"
#include "radstein/distribution.hpp"

namespace radstein {

// value with error metadata; abs_error is 0 for exact results and a
// 3-standard-error half width for Monte Carlo ones
struct EstimatedValue {
    double value = 0.0;
    double abs_error = 0.0;
};

class ExpectationEngine {
  public:
    enum class Mode { Exact, MonteCarlo };

    static ExpectationEngine exact(int cap = kDefaultCap) {
        ExpectationEngine e;
        e.mode = Mode::Exact;
        e.cap = cap;
        return e;
    }
    static ExpectationEngine monte_carlo(std::uint64_t samples, std::uint64_t seed) {
        ExpectationEngine e;
        e.mode = Mode::MonteCarlo;
        e.samples = samples;
        e.seed = seed;
        return e;
    }

    bool is_exact() const { return mode == Mode::Exact; }

    static constexpr int kDefaultCap = 24;
    Mode mode = Mode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int cap = kDefaultCap;
};

using Evaluator = std::function<double(const RademacherPoint&)>;

Evaluator as_evaluator(const ChaosExpansion& F);

EstimatedValue expectation(const Evaluator& G, int n, const ExpectationEngine& engine);
EstimatedValue moment(const ChaosExpansion& F, int k, const ExpectationEngine& engine);
// kappa4 = E[F^4] - 3 E[F^2]^2
EstimatedValue kappa4(const ChaosExpansion& F, const ExpectationEngine& engine);

// Stroock decomposition by exact enumeration, orders 1..max_order.
ChaosExpansion decompose(const Evaluator& G, int n, int max_order,
                         int cap = ExpectationEngine::kDefaultCap);

// law of G under the uniform measure on {-1,+1}^n (exact enumeration)
AtomicDistribution exact_law(const Evaluator& G, int n,
                             int cap = ExpectationEngine::kDefaultCap);

// deterministic chunked Monte Carlo draws of G (chunk-seeded counter RNG)
std::vector<double> mc_sample_values(const Evaluator& G, int n,
                                     std::uint64_t samples, std::uint64_t seed);

int engine_threads();

}  // namespace radstein
