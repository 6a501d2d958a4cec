#include "radstein/bounds.hpp"

#include <cmath>

namespace radstein {

namespace {

constexpr double kSqrt2Pi4 = 0.6266570686577501;  // sqrt(2*pi)/4

// cyclic Jacobi eigenvalues of a small symmetric matrix
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const int d = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-28) break;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(d);
    for (int i = 0; i < d; ++i) ev[i] = a[i][i];
    return ev;
}

// run fn(point, weight) over the hypercube (exact) or over samples (MC)
template <typename Fn>
void for_each_point(int n, const ExpectationEngine& engine, Fn&& fn) {
    if (engine.is_exact()) {
        if (n > engine.cap)
            throw std::runtime_error("exact enumeration refused: dimension exceeds cap");
        const std::uint64_t total = 1ull << n;
        const double w = 1.0 / static_cast<double>(total);
        for (std::uint64_t bits = 0; bits < total; ++bits)
            fn(RademacherPoint::from_bits(n, bits), w);
        return;
    }
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t samples = engine.samples;
    if (samples == 0) throw std::invalid_argument("Monte Carlo engine needs samples > 0");
    const double w = 1.0 / static_cast<double>(samples);
    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        CounterRng rng(engine.seed, c);
        const std::uint64_t hi = std::min(samples, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < hi; ++i) fn(RademacherPoint::random(n, rng), w);
    }
}

// sup over x of a signed sum of half-open interval indicators [lo, hi) x weight
double sweep_sup(std::vector<std::pair<double, double>>& events) {
    // events hold (position, delta); the running sum after all deltas at a
    // position is the function value on [position, next position)
    std::sort(events.begin(), events.end());
    double cur = 0.0, sup = 0.0;
    std::size_t i = 0;
    while (i < events.size()) {
        const double pos = events[i].first;
        for (; i < events.size() && events[i].first == pos; ++i) cur += events[i].second;
        sup = std::max(sup, cur);
    }
    return sup;
}

double coef_c(int q, int r) {  // (r-1)! C(q-1,r-1)^2
    return factorial(r - 1) * binomial(q - 1, r - 1) * binomial(q - 1, r - 1);
}

// ||f *_r^{r-1} g||^2 with the cheap r=1 route ||f *_1^0 f|| = ||f *_q^{q-1} f||
double star_r_rm1_norm2(const Kernel& f, int r) {
    const int q = f.order();
    MultiIndexTable t = (r == 1 && q > 1) ? contract(f, f, q, q - 1) : contract(f, f, r, r - 1);
    const double n = norm2(t);
    return n * n;
}

}  // namespace

CovarianceSpec CovarianceSpec::identity(int d) {
    CovarianceSpec c;
    c.d = d;
    c.sigma.assign(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) c.sigma[i][i] = 1.0;
    return c;
}

void CovarianceSpec::validate() const {
    if (d < 1 || static_cast<int>(sigma.size()) != d)
        throw std::invalid_argument("CovarianceSpec: bad dimension");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(sigma[i].size()) != d)
            throw std::invalid_argument("CovarianceSpec: ragged matrix");
        for (int j = 0; j < d; ++j)
            if (std::abs(sigma[i][j] - sigma[j][i]) > 1e-12)
                throw std::invalid_argument("CovarianceSpec: matrix not symmetric");
    }
    for (double ev : symmetric_eigenvalues(sigma))
        if (ev < -1e-10) throw std::invalid_argument("CovarianceSpec: matrix not PSD");
}

BoundReport malliavin_stein_terms(const ChaosExpansion& F, const ExpectationEngine& engine) {
    if (std::abs(F.constant()) > 1e-12)
        throw std::invalid_argument("malliavin_stein_terms: functional must be centred");
    const int n = F.dimension();
    GradientField DF = gradient(F);
    ChaosExpansion minusLinv = ou_inverse(F);
    minusLinv.scale(-1.0);
    GradientField B = gradient(minusLinv);  // B_k = -D_k L^{-1} F

    double sA1 = 0, sA1sq = 0, sA2 = 0, sA2sq = 0, sA3 = 0, sDF4 = 0, sF4 = 0;
    std::vector<std::pair<double, double>> events;
    for_each_point(n, engine, [&](const RademacherPoint& x, double w) {
        const double Fv = evaluate(F, x);
        double inner = 0, a2 = 0, a2sq = 0, df2sum = 0;
        for (int k = 1; k <= n; ++k) {
            const double d = evaluate(DF.component(k), x);
            const double b = evaluate(B.component(k), x);
            inner += d * b;
            a2 += d * d * std::abs(b);
            a2sq += d * d * b * b;
            df2sum += d * d;
            // indicator-gradient breakpoints: F(x with x_k = s) = Fv + (s - x_k) d
            const double fp = Fv + (1.0 - x[k]) * d;
            const double fm = Fv - (1.0 + x[k]) * d;
            const double c = 0.5 * w * d * std::abs(b);
            if (fp > fm) {
                events.emplace_back(fm, c);
                events.emplace_back(fp, -c);
            } else if (fm > fp) {
                events.emplace_back(fp, -c);
                events.emplace_back(fm, c);
            }
        }
        sA1 += w * std::abs(1.0 - inner);
        sA1sq += w * (1.0 - inner) * (1.0 - inner);
        sA2 += w * a2;
        sA2sq += w * a2sq;
        sA3 += w * std::abs(Fv) * a2;
        sDF4 += w * df2sum * df2sum;
        sF4 += w * Fv * Fv * Fv * Fv;
    });

    const double A1 = sA1;
    const double A2 = kSqrt2Pi4 * sA2;
    const double A3 = sA3;
    const double A4 = 2.0 * std::max(0.0, sweep_sup(events));

    BoundReport r;
    r.name = "malliavin_stein_terms";
    r.engine = EngineMeta::from(engine);
    r.set("A1", A1);
    r.set("A2", A2);
    r.set("A3", A3);
    r.set("A4", A4);
    r.total = A1 + A2 + A3 + A4;
    r.set("corollary_A1", std::sqrt(sA1sq));
    r.set("corollary_A2", std::sqrt(sA2sq));
    const double cA3 = std::pow(sDF4, 0.25) * (std::pow(sF4, 0.25) + 1.0);
    r.set("corollary_A3", cA3);
    r.set("corollary_total", std::sqrt(sA1sq) + std::sqrt(sA2sq) * cA3 + A4);
    return r;
}

BoundReport first_chaos_bound(const std::vector<double>& a, const ExpectationEngine& engine) {
    double n2 = 0, cubic = 0;
    for (double v : a) {
        n2 += v * v;
        cubic += std::abs(v) * std::abs(v) * std::abs(v);
    }
    if (std::abs(n2 - 1.0) > 1e-10)
        throw std::invalid_argument("first_chaos_bound: weights must have unit l2 norm, got " +
                                    std::to_string(n2));
    SmallBallSup sb = small_ball_sup(a, engine);
    BoundReport r;
    r.name = "first_chaos";
    r.engine = EngineMeta::from(engine);
    r.set("cubic_term", 2.0 * cubic);
    r.set("small_ball_sup", sb.value);
    r.set("small_ball_argmax", sb.argmax);
    r.set("small_ball_candidates", static_cast<double>(sb.candidates));
    r.total = 2.0 * cubic + sb.value;
    return r;
}

double gradient_variance_identity(const Kernel& f) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("gradient_variance_identity: q >= 2 required");
    const double n2 = f.norm2() * f.norm2();
    double s = (1.0 - factorial(q) * n2) * (1.0 - factorial(q) * n2);
    for (int r = 1; r <= q - 1; ++r) {
        MultiIndexTable c = contract(f, f, r, r);
        MultiIndexTable on = restrict(symmetrize(c), DiagonalMask(2 * (q - r)), true);
        const double cn = norm2(on);
        s += q * q * coef_c(q, r) * coef_c(q, r) * factorial(2 * (q - r)) * cn * cn;
    }
    return s;
}

double gradient_l4_bound(const Kernel& f) {
    const int q = f.order();
    if (q == 1) {
        // exact in first chaos: ||DF||_{l4}^4 = sum_k f(k)^4
        return f.norm4();
    }
    double s = 0.0;
    for (int r = 1; r <= q; ++r)
        s += coef_c(q, r) * coef_c(q, r) * factorial(2 * (q - r)) * star_r_rm1_norm2(f, r);
    return std::pow(static_cast<double>(q), 4) * s;
}

BoundReport chaos_q_bound(const Kernel& f, double sigma2) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("chaos_q_bound: order >= 2 required");
    if (sigma2 <= 0.0) throw std::invalid_argument("chaos_q_bound: sigma2 must be positive");
    Kernel g = f;
    g.scale(1.0 / std::sqrt(sigma2));  // bound d_K(J_q(f), N(0,sigma2)) = d_K(J_q(g), N(0,1))

    const double gn2 = g.norm2() * g.norm2();
    const double fq = factorial(q);
    const double gap = std::abs(1.0 - fq * gn2);

    std::vector<double> full2(q, 0.0), on2(q, 0.0), d2(q + 1, 0.0);
    for (int r = 1; r <= q - 1; ++r) {
        MultiIndexTable c = contract(g, g, r, r);
        const double nf = norm2(c);
        full2[r] = nf * nf;
        const double no = norm2(restrict(c, DiagonalMask(2 * (q - r)), true));
        on2[r] = no * no;
    }
    for (int r = 1; r <= q; ++r) d2[r] = star_r_rm1_norm2(g, r);

    double S1 = 0.0;
    for (int r = 1; r <= q - 1; ++r)
        S1 += coef_c(q, r) * coef_c(q, r) * factorial(2 * (q - r)) * on2[r];

    const double A1b = gap + q * std::sqrt(S1);

    double s2 = 0.0;
    for (int r = 1; r <= q; ++r)
        s2 += coef_c(q, r) * coef_c(q, r) * factorial(2 * (q - r)) * d2[r];
    const double A2b = q * std::sqrt(s2);

    const double X31 = std::sqrt(q * fq * gn2) + q * std::pow(S1, 0.25);
    double X32 = 3.0 * fq * gn2 * fq * gn2;
    for (int r = 1; r <= q - 1; ++r) {
        const double b1 = fq * binomial(q, r);
        const double b2 = factorial(r) * binomial(q, r) * binomial(q, r);
        X32 += (b1 * b1 + b2 * b2 * factorial(2 * (q - r))) * on2[r];
    }
    const double A3b = X31 * (std::pow(X32, 0.25) + 1.0);

    double s4 = 0.0;
    for (int r = 2; r <= q; ++r) {
        const double e = factorial(r - 2) * binomial(q - 2, r - 2) * binomial(q - 2, r - 2);
        s4 += e * e * factorial(2 * (q - r)) * d2[r];
    }
    const double A4p = q * (q - 1) * std::pow(s4, 0.25);
    const double A4b = 2.0 * A2b + 4.0 * std::sqrt(A2b / q) * A4p;

    BoundReport r;
    r.name = "chaos_q";
    r.set("variance_gap", std::abs(sigma2 - fq * f.norm2() * f.norm2()));
    r.set("normalized_variance_gap", gap);
    for (int rr = 1; rr <= q - 1; ++rr) {
        r.set("contract_" + std::to_string(rr) + "_full", std::sqrt(full2[rr]));
        r.set("contract_" + std::to_string(rr) + "_ondiag", std::sqrt(on2[rr]));
        if (std::sqrt(on2[rr]) >= 1.0)
            r.notes.push_back("hypothesis ||(f*_r^r f)1_Delta|| < 1 violated at r = " +
                              std::to_string(rr));
    }
    for (int rr = 1; rr <= q; ++rr)
        r.set("contract_" + std::to_string(rr) + "_half", std::sqrt(d2[rr]));
    r.set("A1_bound", A1b);
    r.set("A2_bound", A2b);
    r.set("A3_bound", A3b);
    r.set("A4_bound", A4b);
    double c1 = gap, c2 = gap;
    for (int rr = 1; rr <= q - 1; ++rr) {
        c1 = std::max(c1, std::sqrt(on2[rr]));
        c2 = std::max(c2, std::sqrt(full2[rr]));
    }
    for (int rr = 1; rr <= q; ++rr) c1 = std::max(c1, std::sqrt(d2[rr]));
    r.set("C1_max_arg", c1);
    r.set("C2_max_arg", c2);
    r.notes.push_back("C1_max_arg and C2_max_arg carry paper constants that were never pinned");
    r.total = A1b + A2b * A3b + A4b;
    return r;
}

BoundReport sum12_bound(const Kernel& f1, const Kernel& f2) {
    if (f1.order() != 1 || f2.order() != 2)
        throw std::invalid_argument("sum12_bound: expects orders 1 and 2");
    const double var = f1.norm2() * f1.norm2() + 2.0 * f2.norm2() * f2.norm2();
    if (std::abs(var - 1.0) > 1e-10)
        throw std::invalid_argument("sum12_bound: total variance must be 1, got " +
                                    std::to_string(var));

    const double t1 = 3.0 * norm2(contract(f1, f2, 1, 1));
    MultiIndexTable c22 = contract(f2, f2, 1, 1);
    const double on = norm2(restrict(c22, DiagonalMask(2), true));
    const double off = norm2(restrict(c22, DiagonalMask(2), false));
    const double t2 = 2.0 * std::sqrt(2.0) * on;
    const double t3 = 2.0 * std::sqrt(f1.norm4());
    const double t4 = (4.0 * std::sqrt(2.0) + 12.0) * off;
    double cross = 0.0;
    for (const auto& [t, v] : f1.canonical())
        for (const auto& [s, w] : f2.canonical()) {
            // ordered sum over (k, j): each canonical f2 pair {a,b} appears twice
            if (s[0] == t[0] || s[1] == t[0]) cross += v * v * w * w;
        }
    const double t5 = (2.0 * std::sqrt(13.0) + 6.0) * std::sqrt(2.0 * cross);
    // influence term: 2 sum_k (|f1(k)| + 2 sum_j |f2(j,k)|)^3
    std::map<Index, double> infl;
    for (const auto& [t, v] : f1.canonical()) infl[t[0]] += std::abs(v);
    for (const auto& [s, w] : f2.canonical()) {
        infl[s[0]] += 2.0 * std::abs(w);
        infl[s[1]] += 2.0 * std::abs(w);
    }
    double t6 = 0.0;
    for (const auto& [k, v] : infl) t6 += 2.0 * v * v * v;

    BoundReport r;
    r.name = "sum12";
    r.set("cross_contraction", t1);
    r.set("ondiag_contraction", t2);
    r.set("first_l4", t3);
    r.set("offdiag_contraction", t4);
    r.set("mixed_l2", t5);
    r.set("influence_cubes", t6);
    r.total = t1 + t2 + t3 + t4 + t5 + t6;
    return r;
}

namespace {

void check_unit_variance_order2(const Kernel& f, const char* who) {
    if (f.order() != 2) throw std::invalid_argument(std::string(who) + ": order-2 kernel required");
    const double var = 2.0 * f.norm2() * f.norm2();
    if (std::abs(var - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": 2||f||^2 must be 1, got " +
                                    std::to_string(var));
}

}  // namespace

namespace {

// squared-norm difference ||c 1_offdiag||^2 - ||c 1_diag||^2 without the
// sqrt/square round trip, to keep rational inputs exact
double diag_norm2_gap(const MultiIndexTable& c) {
    double on = 0.0, off = 0.0;
    for (const auto& [t, v] : c.entries()) {
        if (DiagonalMask::all_distinct(t)) on += v * v;
        else off += v * v;
    }
    return on - off;
}

}  // namespace

double fourth_moment_J2(const Kernel& f) {
    check_unit_variance_order2(f, "fourth_moment_J2");
    return 3.0 + 32.0 * f.norm4() + 48.0 * diag_norm2_gap(contract(f, f, 1, 1));
}

double necessary_statistic(const Kernel& f) {
    check_unit_variance_order2(f, "necessary_statistic");
    return 2.0 * f.norm4() + 3.0 * diag_norm2_gap(contract(f, f, 1, 1));
}

BoundReport multivariate_bound(const std::vector<ChaosExpansion>& Fs, const CovarianceSpec& cov,
                               const ExpectationEngine& engine) {
    cov.validate();
    const int d = static_cast<int>(Fs.size());
    if (d != cov.d) throw std::invalid_argument("multivariate_bound: dimension mismatch");
    int n = 0;
    for (const auto& F : Fs) {
        if (std::abs(F.constant()) > 1e-12)
            throw std::invalid_argument("multivariate_bound: all functionals must be centred");
        n = std::max(n, F.dimension());
    }
    std::vector<GradientField> DF, B;
    for (const auto& F : Fs) {
        DF.push_back(gradient(F));
        ChaosExpansion m = ou_inverse(F);
        m.scale(-1.0);
        B.push_back(gradient(m));
    }
    std::vector<std::vector<double>> gap2(d, std::vector<double>(d, 0.0));
    double term2 = 0.0;
    for_each_point(n, engine, [&](const RademacherPoint& x, double w) {
        std::vector<std::vector<double>> dv(d, std::vector<double>(n)), bv(d, std::vector<double>(n));
        for (int i = 0; i < d; ++i)
            for (int k = 1; k <= std::min(n, Fs[i].dimension()); ++k) {
                dv[i][k - 1] = evaluate(DF[i].component(k), x);
                bv[i][k - 1] = evaluate(B[i].component(k), x);
            }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double inner = 0.0;
                for (int k = 0; k < n; ++k) inner += dv[j][k] * bv[i][k];
                const double g = cov.sigma[i][j] - inner;
                gap2[i][j] += w * g * g;
            }
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            double sj = 0.0, si = 0.0;
            for (int i = 0; i < d; ++i) {
                sj += std::abs(dv[i][k]);
                si += std::abs(bv[i][k]);
            }
            s += sj * sj * sj * si;
        }
        term2 += w * s;
    });
    double sumgap = 0.0;
    BoundReport r;
    r.name = "multivariate_d4";
    r.engine = EngineMeta::from(engine);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            sumgap += gap2[i][j];
            r.set("gap2_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), gap2[i][j]);
        }
    const double t1 = 0.5 * d * std::sqrt(sumgap);
    const double t2 = 5.0 / 3.0 * term2;
    r.set("term1", t1);
    r.set("term2", t2);
    r.total = t1 + t2;
    return r;
}

BoundReport multivariate_contraction_bound(const std::vector<Kernel>& fs,
                                           const CovarianceSpec& cov) {
    cov.validate();
    const int d = static_cast<int>(fs.size());
    if (d != cov.d)
        throw std::invalid_argument("multivariate_contraction_bound: dimension mismatch");
    int qmin = fs[0].order();
    for (const auto& f : fs) qmin = std::min(qmin, f.order());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (fs[i].order() != fs[j].order() && cov.sigma[i][j] != 0.0)
                throw std::invalid_argument(
                    "multivariate_contraction_bound: sigma_ij must vanish when orders differ");

    BoundReport r;
    r.name = "multivariate_contraction";
    double V = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Kernel& f = fs[i].order() <= fs[j].order() ? fs[i] : fs[j];
            const Kernel& g = fs[i].order() <= fs[j].order() ? fs[j] : fs[i];
            const int p = f.order(), q = g.order();
            double v;
            if (p == q) {
                const double gap = cov.sigma[i][j] - factorial(p) * Kernel::inner(f, g);
                v = gap * gap;
                if (i <= j)
                    r.set("gap_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                          std::abs(gap));
                for (int rr = 1; rr <= p - 1; ++rr) {
                    const double m2 = contraction_norm2_rr(f, g, rr);
                    const double b = binomial(p - 1, rr - 1);
                    v += p * p * factorial(rr - 1) * factorial(rr - 1) * b * b * b * b *
                         factorial(2 * (p - rr)) * m2;
                    if (i < j)
                        r.set("mixed_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                  "_r" + std::to_string(rr),
                              std::sqrt(m2));
                }
            } else {
                v = cov.sigma[i][j] * cov.sigma[i][j];
                for (int rr = 1; rr <= p; ++rr) {
                    const double m2 = contraction_norm2_rr(f, g, rr);
                    const double bf = binomial(p - 1, rr - 1), bg = binomial(q - 1, rr - 1);
                    v += p * p * factorial(rr - 1) * factorial(rr - 1) * bf * bf * bg * bg *
                         factorial(p + q - 2 * rr) * m2;
                    if (i < j)
                        r.set("mixed_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                  "_r" + std::to_string(rr),
                              std::sqrt(m2));
                }
            }
            V += v;
        }
    const double term1 = 0.5 * d * std::sqrt(V);

    double l4sum = 0.0;
    for (int i = 0; i < d; ++i) {
        l4sum += gradient_l4_bound(fs[i]);
        const int q = fs[i].order();
        for (int rr = 1; rr <= q - 1; ++rr)
            r.set("self_" + std::to_string(i + 1) + "_r" + std::to_string(rr),
                  std::sqrt(contraction_norm2_rr(fs[i], fs[i], rr)));
    }
    const double term2 =
        5.0 / 3.0 * static_cast<double>(d) * d * d / static_cast<double>(qmin) * l4sum;

    // unspecified-constant max-form arguments of the corollary
    double c1 = 0.0, c2 = 0.0;
    for (int i = 0; i < d; ++i) {
        const int qi = fs[i].order();
        for (int j = 0; j < d; ++j) {
            const int qj = fs[j].order();
            const double gap =
                std::abs(cov.sigma[i][j] - (qi == qj ? factorial(qi) * Kernel::inner(fs[i], fs[j])
                                                     : 0.0));
            c1 = std::max(c1, gap);
            c2 = std::max(c2, gap);
            const int rmax = qi == qj ? qi - 1 : std::min(qi, qj);
            for (int rr = 1; rr <= rmax; ++rr)
                c1 = std::max(c1, std::sqrt(contraction_norm2_rr(fs[i], fs[j], rr)));
        }
        for (int rr = 1; rr <= qi - 1; ++rr) {
            const double s = std::sqrt(contraction_norm2_rr(fs[i], fs[i], rr));
            c1 = std::max(c1, s * s);
            c2 = std::max(c2, std::max(s, s * s));
            for (int j = 0; j < d; ++j)
                c2 = std::max(c2, fs[j].norm2() * std::sqrt(s));
        }
    }
    r.set("term1", term1);
    r.set("term2", term2);
    r.set("Cor1_max_arg", c1);
    r.set("Cor2_max_arg", c2);
    r.notes.push_back("Cor1_max_arg and Cor2_max_arg carry paper constants that were never pinned");
    r.notes.push_back("equal-order variance term uses (2(p-r))! per the isometry");
    r.total = term1 + term2;
    return r;
}

}  // namespace radstein
