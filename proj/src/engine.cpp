#include "radstein/engine.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

namespace radstein {

namespace {

constexpr std::uint64_t kChunk = 4096;

void check_cap(int n, int cap) {
    if (n < 0) throw std::invalid_argument("expectation: negative dimension");
    if (n > cap)
        throw std::runtime_error("exact enumeration refused: dimension " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
}

// runs fn(chunk_index) over [0, chunks) on a pool, results merged in chunk order
template <typename Part, typename Fn>
std::vector<Part> run_chunked(std::uint64_t chunks, Fn&& fn) {
    std::vector<Part> parts(chunks);
    const int threads = std::min<std::uint64_t>(engine_threads(), std::max<std::uint64_t>(chunks, 1));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) parts[c] = fn(c);
        return parts;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                parts[c] = fn(c);
        });
    for (auto& th : pool) th.join();
    return parts;
}

struct MomentPart {
    double sum = 0.0;
    double sumsq = 0.0;
};

EstimatedValue exact_expectation(const Evaluator& G, int n) {
    const std::uint64_t total = 1ull << n;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    auto parts = run_chunked<double>(chunks, [&](std::uint64_t c) {
        const std::uint64_t lo = c * kChunk, hi = std::min(total, lo + kChunk);
        double s = 0.0;
        for (std::uint64_t bits = lo; bits < hi; ++bits)
            s += G(RademacherPoint::from_bits(n, bits));
        return s;
    });
    double s = 0.0;
    for (double p : parts) s += p;  // fixed merge order keeps the result deterministic
    return {s / static_cast<double>(total), 0.0};
}

EstimatedValue mc_expectation(const Evaluator& G, int n, std::uint64_t samples,
                              std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("expectation: zero Monte Carlo samples");
    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    auto parts = run_chunked<MomentPart>(chunks, [&](std::uint64_t c) {
        const std::uint64_t lo = c * kChunk, hi = std::min(samples, lo + kChunk);
        CounterRng rng(seed, c);
        MomentPart p;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double v = G(RademacherPoint::random(n, rng));
            p.sum += v;
            p.sumsq += v * v;
        }
        return p;
    });
    MomentPart tot;
    for (const auto& p : parts) {
        tot.sum += p.sum;
        tot.sumsq += p.sumsq;
    }
    const double N = static_cast<double>(samples);
    const double mean = tot.sum / N;
    const double var = std::max(0.0, tot.sumsq / N - mean * mean);
    return {mean, 3.0 * std::sqrt(var / N)};
}

}  // namespace

int engine_threads() {
    if (const char* env = std::getenv("RADSTEIN_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Evaluator as_evaluator(const ChaosExpansion& F) {
    return [F](const RademacherPoint& x) { return evaluate(F, x); };
}

EstimatedValue expectation(const Evaluator& G, int n, const ExpectationEngine& engine) {
    if (engine.is_exact()) {
        check_cap(n, engine.cap);
        return exact_expectation(G, n);
    }
    return mc_expectation(G, n, engine.samples, engine.seed);
}

EstimatedValue moment(const ChaosExpansion& F, int k, const ExpectationEngine& engine) {
    if (k < 1) throw std::invalid_argument("moment: order >= 1 required");
    Evaluator G = as_evaluator(F);
    return expectation([G, k](const RademacherPoint& x) { return std::pow(G(x), k); },
                       F.dimension(), engine);
}

EstimatedValue kappa4(const ChaosExpansion& F, const ExpectationEngine& engine) {
    EstimatedValue m4 = moment(F, 4, engine);
    EstimatedValue m2 = moment(F, 2, engine);
    // error propagation: |d kappa4| <= |d m4| + 6 |m2| |d m2|
    return {m4.value - 3.0 * m2.value * m2.value,
            m4.abs_error + 6.0 * std::abs(m2.value) * m2.abs_error};
}

ChaosExpansion decompose(const Evaluator& G, int n, int max_order, int cap) {
    check_cap(n, cap);
    if (max_order < 0 || max_order > n)
        throw std::invalid_argument("decompose: need 0 <= max_order <= dimension");
    const std::uint64_t total = 1ull << n;
    ChaosExpansion F(n, exact_expectation(G, n).value);
    // Stroock formula: f_q(t) = E[G prod_{i in t} X_i] / q! on increasing tuples
    for (int q = 1; q <= max_order; ++q) {
        Kernel f(q);
        Tuple t(q);
        for (int i = 0; i < q; ++i) t[i] = i + 1;
        const double inv = 1.0 / factorial(q);
        while (true) {
            double s = 0.0;
            for (std::uint64_t bits = 0; bits < total; ++bits) {
                const RademacherPoint x = RademacherPoint::from_bits(n, bits);
                double prod = G(x);
                for (Index i : t) prod *= x[i];
                s += prod;
            }
            f.set(t, s / static_cast<double>(total) * inv);
            // next increasing tuple over [1, n]
            int j = q - 1;
            while (j >= 0 && t[j] == n - (q - 1 - j)) --j;
            if (j < 0) break;
            ++t[j];
            for (int i = j + 1; i < q; ++i) t[i] = t[i - 1] + 1;
        }
        f.prune(1e-13);
        if (f.support_size() > 0) F.set_term(f);
    }
    return F;
}

AtomicDistribution exact_law(const Evaluator& G, int n, int cap) {
    check_cap(n, cap);
    const std::uint64_t total = 1ull << n;
    const double p = 1.0 / static_cast<double>(total);
    std::map<double, double> atoms;
    for (std::uint64_t bits = 0; bits < total; ++bits)
        atoms[G(RademacherPoint::from_bits(n, bits))] += p;
    std::vector<std::pair<double, double>> v(atoms.begin(), atoms.end());
    return AtomicDistribution(std::move(v));
}

std::vector<double> mc_sample_values(const Evaluator& G, int n, std::uint64_t samples,
                                     std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("mc_sample_values: zero samples");
    std::vector<double> out(samples);
    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    auto parts = run_chunked<int>(chunks, [&](std::uint64_t c) {
        const std::uint64_t lo = c * kChunk, hi = std::min(samples, lo + kChunk);
        CounterRng rng(seed, c);
        for (std::uint64_t i = lo; i < hi; ++i)
            out[i] = G(RademacherPoint::random(n, rng));
        return 0;
    });
    (void)parts;
    return out;
}

}  // namespace radstein
