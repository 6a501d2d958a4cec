#include "radstein/comb.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace radstein {

namespace {

struct SigInfo {
    int count = 0;      // ordered tuples of F with this signature
    double weight = 0;  // prod of b^2 over the signature
};

using SigMap = std::unordered_map<Tuple, SigInfo, TupleHash>;

SigMap signatures(const CombSpec& spec) {
    SigMap sigs;
    for (const Tuple& t : spec.tuples) {
        Tuple s = t;
        std::sort(s.begin(), s.end());
        auto& info = sigs[s];
        if (info.count++ == 0) {
            double w = 1.0;
            for (Index i : s) w *= spec.b[i - 1] * spec.b[i - 1];
            info.weight = w;
        }
    }
    return sigs;
}

Tuple set_minus(const Tuple& a, const Tuple& b) {  // sorted inputs
    Tuple out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Tuple set_and(const Tuple& a, const Tuple& b) {
    Tuple out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool disjoint(const Tuple& a, const Tuple& b) { return set_and(a, b).empty(); }

}  // namespace

void CombSpec::validate() const {
    if (q < 2) throw std::invalid_argument("CombSpec: q >= 2 required");
    if (tuples.empty()) throw std::invalid_argument("CombSpec: empty tuple set");
    for (const Tuple& t : tuples) {
        if (static_cast<int>(t.size()) != q)
            throw std::invalid_argument("CombSpec: tuple length != q");
        for (Index i : t)
            if (i < 1 || i > static_cast<Index>(b.size()))
                throw std::invalid_argument("CombSpec: tuple index outside weight range");
        if (!DiagonalMask::all_distinct(t))
            throw std::invalid_argument("CombSpec: tuple with repeated components");
    }
    if (comb_measure(*this) <= 0.0)
        throw std::invalid_argument("CombSpec: zero product measure on F");
}

double comb_measure(const CombSpec& spec) {
    double mu = 0.0;
    for (const Tuple& t : spec.tuples) {
        double w = 1.0;
        for (Index i : t) w *= spec.b[i - 1] * spec.b[i - 1];
        mu += w;
    }
    return mu;
}

Kernel comb_kernel(const CombSpec& spec) {
    spec.validate();
    const double mu = comb_measure(spec);
    const double qf = factorial(spec.q);
    const double norm = qf * std::sqrt(qf * mu);
    Kernel f(spec.q);
    for (const auto& [s, info] : signatures(spec)) {
        double w = 1.0;
        for (Index i : s) w *= spec.b[i - 1];
        f.add(s, info.count * w / norm);
    }
    return f;
}

ChaosExpansion comb_functional(const CombSpec& spec) {
    Kernel f = comb_kernel(spec);
    return pure_chaos(f.max_index(), f);
}

PhiPsi comb_phi_psi(const CombSpec& spec) {
    spec.validate();
    const double mu = comb_measure(spec);
    SigMap sigmap = signatures(spec);

    std::vector<Tuple> sig;
    std::vector<SigInfo> info;
    std::unordered_map<Tuple, int, TupleHash> id;
    for (auto& [s, i] : sigmap) {
        id.emplace(s, static_cast<int>(sig.size()));
        sig.push_back(s);
        info.push_back(i);
    }
    const int ns = static_cast<int>(sig.size());

    // element -> signatures through it, and nonempty subset -> signatures over it
    std::unordered_map<Index, std::vector<int>> by_elem;
    std::unordered_map<Tuple, std::vector<int>, TupleHash> by_subset;
    for (int si = 0; si < ns; ++si) {
        for (Index e : sig[si]) by_elem[e].push_back(si);
        const int q = spec.q;
        for (unsigned mask = 1; mask + 1 < (1u << q); ++mask) {
            Tuple sub;
            for (int k = 0; k < q; ++k)
                if (mask & (1u << k)) sub.push_back(sig[si][k]);
            by_subset[sub].push_back(si);
        }
    }

    // a pair {s, t} of disjoint signatures qualifies when s cup t also splits
    // into two F-signatures different from s and t; scan witnesses s' through
    // each element of s, with beta = s' minus s forcing the t candidates
    std::unordered_set<std::uint64_t> qualified;
    for (int si = 0; si < ns; ++si) {
        std::unordered_set<int> seen;
        for (Index e : sig[si])
            for (int wi : by_elem[e]) {
                if (wi == si || !seen.insert(wi).second) continue;
                const Tuple alpha = set_and(sig[wi], sig[si]);
                const Tuple beta = set_minus(sig[wi], alpha);
                if (beta.empty()) continue;  // s' inside s is impossible off the diagonal
                auto cand = by_subset.find(beta);
                if (cand == by_subset.end()) continue;
                const Tuple s_rest = set_minus(sig[si], alpha);
                for (int ti : cand->second) {
                    if (ti == si || !disjoint(sig[ti], sig[si])) continue;
                    Tuple other = s_rest;
                    const Tuple t_rest = set_minus(sig[ti], beta);
                    other.insert(other.end(), t_rest.begin(), t_rest.end());
                    std::sort(other.begin(), other.end());
                    if (id.find(other) == id.end()) continue;
                    const std::uint64_t a = static_cast<std::uint64_t>(std::min(si, ti));
                    const std::uint64_t b = static_cast<std::uint64_t>(std::max(si, ti));
                    qualified.insert((a << 32) | b);
                }
            }
    }
    double mu_sharp = 0.0;
    for (std::uint64_t key : qualified) {
        const int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
        mu_sharp += 2.0 * info[a].count * info[a].weight * info[b].count * info[b].weight;
    }

    PhiPsi out;
    out.phi = std::sqrt(mu_sharp) / mu;
    Index maxi = 0;
    for (const auto& s : sig) maxi = std::max(maxi, s.back());
    out.psi.assign(maxi, 0.0);
    for (int si = 0; si < ns; ++si)
        for (Index e : sig[si]) out.psi[e - 1] += info[si].count * info[si].weight / mu;
    for (double p : out.psi) out.psi_sup = std::max(out.psi_sup, p);
    return out;
}

void FcpSpec::validate() const {
    if (m < 2 || m > q) throw std::invalid_argument("FcpSpec: need 2 <= m <= q");
    if (static_cast<int>(cover.size()) != q)
        throw std::invalid_argument("FcpSpec: cover must have q subsets");
    std::vector<int> appearances(q, 0);
    std::vector<std::vector<int>> sorted_cover;
    for (const auto& M : cover) {
        if (static_cast<int>(M.size()) != m)
            throw std::invalid_argument("FcpSpec: every cover set needs exactly m elements");
        std::vector<int> s = M;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("FcpSpec: repeated element inside a cover set");
        for (int j : s) {
            if (j < 1 || j > q) throw std::invalid_argument("FcpSpec: cover element outside 1..q");
            ++appearances[j - 1];
        }
        for (const auto& prev : sorted_cover)
            if (prev == s) throw std::invalid_argument("FcpSpec: cover sets must be distinct");
        sorted_cover.push_back(s);
    }
    for (int j = 0; j < q; ++j)
        if (appearances[j] != m)
            throw std::invalid_argument("FcpSpec: each index must appear in exactly m sets");
    // connectivity: union-find over cover sets linked by shared elements
    std::vector<int> parent(q);
    for (int i = 0; i < q; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (!set_and(Tuple(sorted_cover[i].begin(), sorted_cover[i].end()),
                         Tuple(sorted_cover[j].begin(), sorted_cover[j].end()))
                     .empty())
                parent[find(i)] = find(j);
    for (int i = 1; i < q; ++i)
        if (find(i) != find(0))
            throw std::invalid_argument("FcpSpec: cover splits into disjoint partial covers");
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    if (n < qm) throw std::invalid_argument("FcpSpec: need n >= q^m");
}

CombSpec fcp_build(const FcpSpec& spec) {
    spec.validate();
    long long K = 0;  // largest K with K^m <= n
    for (long long k = 1;; ++k) {
        long long p = 1;
        bool over = false;
        for (int i = 0; i < spec.m; ++i) {
            p *= k;
            if (p > spec.n) { over = true; break; }
        }
        if (over) break;
        K = k;
    }

    const int q = spec.q, m = spec.m;
    // phi(y) = 1 + sum (y_i - 1) K^{m-i}, the lexicographic bijection [K]^m -> [n]
    std::vector<long long> pw(m, 1);
    for (int i = m - 2; i >= 0; --i) pw[i] = pw[i + 1] * K;

    std::unordered_set<Tuple, TupleHash> closure;
    std::vector<int> y(q, 1);
    while (true) {
        Tuple t(q);
        bool ok = true;
        for (int s = 0; s < q; ++s) {
            long long v = 1;
            int pos = 0;
            for (int j : spec.cover[s]) v += static_cast<long long>(y[j - 1] - 1) * pw[pos++];
            t[s] = static_cast<Index>(v);
        }
        Tuple sorted_t = t;
        std::sort(sorted_t.begin(), sorted_t.end());
        ok = DiagonalMask::all_distinct(sorted_t);
        if (ok) closure.insert(sorted_t);
        int c = q - 1;
        while (c >= 0 && y[c] == K) y[c--] = 1;
        if (c < 0) break;
        ++y[c];
    }

    CombSpec out;
    out.q = q;
    out.b.assign(static_cast<std::size_t>(spec.n), 1.0);
    // symmetric closure: emit every permutation of each surviving signature
    for (const Tuple& s : closure) {
        Tuple perm = s;
        do out.tuples.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (out.tuples.empty()) throw std::invalid_argument("fcp_build: all image tuples degenerate");
    return out;
}

BoundReport comb_bound(const CombSpec& spec) {
    PhiPsi pp = comb_phi_psi(spec);
    Kernel f = comb_kernel(spec);
    BoundReport inner = chaos_q_bound(f, 1.0);

    BoundReport r;
    r.name = "comb";
    r.constants_policy = ConstantsPolicy::UnspecifiedPaperConstant;
    r.set("Phi", pp.phi);
    r.set("PsiSup", pp.psi_sup);
    r.set("PsiSup_quarter", std::pow(pp.psi_sup, 0.25));
    for (const auto& [k, v] : inner.terms) r.set("explicit_" + k, v);
    r.set("explicit_total", inner.total);
    for (const auto& note : inner.notes) r.notes.push_back(note);
    r.total = inner.total;
    r.notes.push_back("Phi and PsiSup_quarter multiply constants the source never pins; "
                      "total is the explicit contraction-bound value");
    return r;
}

}  // namespace radstein
