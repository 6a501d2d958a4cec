#include "radstein/traces.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <thread>

namespace radstein {

namespace {

constexpr double kMaxWalks = 5e7;  // refuse n^q enumerations beyond this

void check_matrix(const std::vector<int>& x, int n) {
    if (static_cast<int>(x.size()) != n * n)
        throw std::invalid_argument("trace: matrix must hold n*n entries");
    for (int v : x)
        if (v != 1 && v != -1) throw std::invalid_argument("trace: entries must be +-1");
}

// visit every closed walk (i_1..i_q) whose q directed edges are pairwise distinct
template <typename Fn>
void for_each_distinct_edge_walk(int q, int n, Fn&& fn) {
    if (std::pow(static_cast<double>(n), q) > kMaxWalks)
        throw std::runtime_error("trace_kernel: n^q walk enumeration too large");
    std::vector<int> walk(q, 1);
    std::vector<std::pair<int, int>> edges(q);
    while (true) {
        bool ok = true;
        for (int a = 0; a < q; ++a) edges[a] = {walk[a], walk[(a + 1) % q]};
        for (int a = 0; a < q && ok; ++a)
            for (int b = a + 1; b < q; ++b)
                if (edges[a] == edges[b]) { ok = false; break; }
        if (ok) fn(walk);
        int c = q - 1;
        while (c >= 0 && walk[c] == n) walk[c--] = 1;
        if (c < 0) break;
        ++walk[c];
    }
}

}  // namespace

void MatrixSpec::validate() const {
    if (n < 1) throw std::invalid_argument("MatrixSpec: n >= 1 required");
    if (orders.empty()) throw std::invalid_argument("MatrixSpec: at least one order");
    int prev = 0;
    for (int q : orders) {
        if (q <= prev) throw std::invalid_argument("MatrixSpec: orders must strictly increase");
        prev = q;
    }
}

Index edge_index(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("edge_index: out of range");
    return static_cast<Index>((i - 1) * n + j);
}

std::pair<int, int> edge_unindex(Index e, int n) {
    if (e < 1 || e > static_cast<Index>(n) * n)
        throw std::invalid_argument("edge_unindex: out of range");
    return {static_cast<int>((e - 1) / n + 1), static_cast<int>((e - 1) % n + 1)};
}

Kernel trace_kernel(int q, int n) {
    if (q < 1 || n < 1) throw std::invalid_argument("trace_kernel: q, n >= 1 required");
    Kernel f(q);
    const double v = std::pow(static_cast<double>(n), -q / 2.0) / factorial(q);
    Tuple t(q);
    for_each_distinct_edge_walk(q, n, [&](const std::vector<int>& walk) {
        for (int a = 0; a < q; ++a) t[a] = edge_index(walk[a], walk[(a + 1) % q], n);
        f.add(t, v);
    });
    return f;
}

double expected_trace(int q, int n) {
    if (q < 1 || n < 1) throw std::invalid_argument("expected_trace: q, n >= 1 required");
    if (q % 2 == 1) return 0.0;  // odd number of edges cannot all be even
    // restricted-growth enumeration of set partitions of the walk positions
    std::vector<int> block(q, 0);
    double total = 0.0;
    auto account = [&](int nblocks) {
        std::map<std::pair<int, int>, int> mult;
        for (int a = 0; a < q; ++a) ++mult[{block[a], block[(a + 1) % q]}];
        for (const auto& [e, m] : mult)
            if (m % 2 != 0) return;
        double ff = 1.0;  // distinct vertices for distinct blocks
        for (int k = 0; k < nblocks; ++k) ff *= (n - k);
        total += ff;
    };
    // restricted growth strings: block[0]=0, block[a] <= number of blocks so far
    auto rec = [&](auto&& self, int a, int used) -> void {
        if (a == q) { account(used); return; }
        for (int b = 0; b <= used; ++b) {
            block[a] = b;
            self(self, a + 1, used + (b == used ? 1 : 0));
        }
    };
    rec(rec, 1, 1);
    return std::pow(static_cast<double>(n), -q / 2.0) * total;
}

std::vector<double> trace_powers(const std::vector<int>& x, int n,
                                 const std::vector<int>& orders) {
    check_matrix(x, n);
    int qmax = 0;
    for (int q : orders) qmax = std::max(qmax, q);
    // integer powers of the unscaled matrix, rescaled at the end
    std::vector<long long> p(x.begin(), x.end()), next(n * n);
    std::vector<double> out;
    int k = 1;
    auto emit = [&](int q) {
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += p[i * n + i];
        out.push_back(tr * std::pow(static_cast<double>(n), -q / 2.0));
    };
    std::size_t oi = 0;
    while (oi < orders.size()) {
        if (orders[oi] == k) {
            emit(k);
            ++oi;
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int l = 0; l < n; ++l) s += p[i * n + l] * x[l * n + j];
                next[i * n + j] = s;
            }
        p.swap(next);
        ++k;
    }
    return out;
}

std::vector<double> trace_sample(const MatrixSpec& spec, const std::vector<int>& x) {
    spec.validate();
    std::vector<double> t = trace_powers(x, spec.n, spec.orders);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= expected_trace(spec.orders[i], spec.n);
    return t;
}

double trace_remainder(int q, int n, const std::vector<int>& x) {
    check_matrix(x, n);
    const double centred = trace_powers(x, n, {q})[0] - expected_trace(q, n);
    Kernel f = trace_kernel(q, n);
    double jq = 0.0;
    for (const auto& [t, v] : f.canonical()) {
        double prod = 1.0;
        for (Index e : t) {
            auto [i, j] = edge_unindex(e, n);
            prod *= x[(i - 1) * n + (j - 1)];
        }
        jq += v * prod;
    }
    jq *= factorial(q);
    return centred - jq;
}

namespace {

// accumulated products t_i t_j and their squares for one sample chunk
struct CovPart {
    std::vector<double> sum, sumsq;
    std::uint64_t count = 0;
};

CovPart run_cov_chunk(const MatrixSpec& spec, std::uint64_t seed, std::uint64_t chunk,
                      std::uint64_t lo, std::uint64_t hi) {
    const int d = static_cast<int>(spec.orders.size());
    CovPart part;
    part.sum.assign(d * d, 0.0);
    part.sumsq.assign(d * d, 0.0);
    CounterRng rng(seed, chunk);
    std::vector<int> x(spec.n * spec.n);
    for (std::uint64_t s = lo; s < hi; ++s) {
        for (auto& v : x) v = rng.next_sign();
        std::vector<double> t = trace_sample(spec, x);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const double u = t[i] * t[j];
                part.sum[i * d + j] += u;
                part.sumsq[i * d + j] += u * u;
            }
        ++part.count;
    }
    return part;
}

}  // namespace

TraceExperiment trace_experiment(const MatrixSpec& spec, const ExpectationEngine& engine,
                                 const std::vector<int>& decay_ns) {
    spec.validate();
    const int d = static_cast<int>(spec.orders.size());
    TraceExperiment out;

    std::vector<Kernel> kernels;
    for (int q : spec.orders) {
        kernels.push_back(trace_kernel(q, spec.n));
        out.chaos_variance.push_back(factorial(q) * kernels.back().norm2() *
                                     kernels.back().norm2());
    }

    out.covariance.assign(d, std::vector<double>(d, 0.0));
    out.covariance_se.assign(d, std::vector<double>(d, 0.0));
    if (engine.is_exact()) {
        const int bits = spec.n * spec.n;
        if (bits > engine.cap)
            throw std::runtime_error("trace_experiment: exact mode needs n*n <= cap");
        const std::uint64_t total = 1ull << bits;
        std::vector<int> x(bits);
        for (std::uint64_t b = 0; b < total; ++b) {
            for (int k = 0; k < bits; ++k) x[k] = (b >> k) & 1 ? 1 : -1;
            std::vector<double> t = trace_sample(spec, x);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    out.covariance[i][j] += t[i] * t[j] / static_cast<double>(total);
        }
    } else {
        constexpr std::uint64_t kChunk = 4096;
        const std::uint64_t samples = engine.samples;
        if (samples == 0) throw std::invalid_argument("trace_experiment: samples > 0 required");
        const std::uint64_t nchunks = (samples + kChunk - 1) / kChunk;
        std::vector<CovPart> parts(nchunks);
        std::atomic<std::uint64_t> cursor{0};
        const unsigned workers = static_cast<unsigned>(
            std::min<std::uint64_t>(nchunks, std::max(1, engine_threads())));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t c; (c = cursor.fetch_add(1)) < nchunks;)
                    parts[c] = run_cov_chunk(spec, engine.seed, c, c * kChunk,
                                             std::min(samples, (c + 1) * kChunk));
            });
        for (auto& th : pool) th.join();
        std::vector<double> sum(d * d, 0.0), sumsq(d * d, 0.0);
        for (const auto& p : parts)  // chunk order keeps the merge deterministic
            for (int k = 0; k < d * d; ++k) {
                sum[k] += p.sum[k];
                sumsq[k] += p.sumsq[k];
            }
        const double N = static_cast<double>(samples);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const double mean = sum[i * d + j] / N;
                const double var = std::max(0.0, sumsq[i * d + j] / N - mean * mean);
                out.covariance[i][j] = mean;
                out.covariance_se[i][j] = std::sqrt(var / N);
            }
    }

    for (std::size_t qi = 0; qi < spec.orders.size(); ++qi) {
        const int q = spec.orders[qi];
        if (q < 2) continue;
        for (int r = 1; r <= q - 1; ++r) {
            Curve c;
            c.name = "contract_q" + std::to_string(q) + "_r" + std::to_string(r);
            c.x_label = "n";
            c.y_label = "norm";
            for (int n : decay_ns) {
                Kernel f = (n == spec.n) ? kernels[qi] : trace_kernel(q, n);
                c.points.emplace_back(n, std::sqrt(contraction_norm2_rr(f, f, r)));
            }
            out.decay_slopes.emplace_back(c.name, loglog_slope(c.points));
            out.decay_curves.push_back(std::move(c));
        }
    }

    CovarianceSpec cov;
    cov.d = d;
    cov.sigma.assign(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) cov.sigma[i][i] = spec.orders[i];
    out.contraction_bound = multivariate_contraction_bound(kernels, cov);
    return out;
}

}  // namespace radstein
