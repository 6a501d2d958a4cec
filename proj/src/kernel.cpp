#include "radstein/kernel.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace radstein {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return std::round(b);
}

MultiIndexTable Kernel::expand() const {
    MultiIndexTable out(order_);
    std::vector<int> perm(order_);
    Tuple u(order_);
    for (const auto& [t, v] : map_) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int i = 0; i < order_; ++i) u[i] = t[perm[i]];
            out.set(u, v);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

double Kernel::norm2() const {
    double s = 0.0;
    for (const auto& [t, v] : map_) s += v * v;
    return std::sqrt(factorial(order_) * s);
}

double Kernel::norm4() const {
    double s = 0.0;
    for (const auto& [t, v] : map_) s += v * v * v * v;
    return factorial(order_) * s;
}

double Kernel::inner(const Kernel& f, const Kernel& g) {
    if (f.order() != g.order()) throw std::invalid_argument("Kernel::inner: order mismatch");
    const Kernel& a = f.support_size() <= g.support_size() ? f : g;
    const Kernel& b = f.support_size() <= g.support_size() ? g : f;
    double s = 0.0;
    for (const auto& [t, v] : a.canonical()) s += v * b.value(t);
    return factorial(f.order()) * s;
}

namespace {

// key = trailing `klen` coordinates of an ordered expansion; payload = leading block
struct JoinIndex {
    std::unordered_map<Tuple, std::vector<std::pair<Tuple, double>>, TupleHash> slots;
};

JoinIndex build_index(const Kernel& g, int klen) {
    const int p = g.order();
    JoinIndex ix;
    std::vector<int> perm(p);
    for (const auto& [t, v] : g.canonical()) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Tuple key(klen), head(p - klen);
            for (int i = 0; i < p - klen; ++i) head[i] = t[perm[i]];
            for (int i = 0; i < klen; ++i) key[i] = t[perm[p - klen + i]];
            ix.slots[key].emplace_back(std::move(head), v);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return ix;
}

}  // namespace

MultiIndexTable contract(const Kernel& f, const Kernel& g, int r, int l) {
    const int q = f.order(), p = g.order();
    if (r < 0 || r > std::min(q, p) || l < 0 || l > r)
        throw std::invalid_argument("contract: need 0 <= l <= r <= min(q,p)");
    const int out_order = q + p - r - l;
    MultiIndexTable out(out_order);

    JoinIndex ix = build_index(g, r);

    std::vector<int> perm(q);
    for (const auto& [t, v] : f.canonical()) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // ordered f-tuple split (i_{1..q-r}, j_{1..r-l}, a_{1..l});
            // the a-block is automatically in Delta_l since kernels vanish on diagonals
            Tuple key(r);
            for (int i = 0; i < r; ++i) key[i] = t[perm[q - r + i]];
            auto it = ix.slots.find(key);
            if (it == ix.slots.end()) continue;
            Tuple u(out_order);
            for (int i = 0; i < q - r; ++i) u[i] = t[perm[i]];
            for (int i = 0; i < r - l; ++i) u[q - r + i] = key[i];
            for (const auto& [head, w] : it->second) {
                for (int i = 0; i < p - r; ++i) u[q - l + i] = head[i];
                out.add(u, v * w);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.prune(0.0);
    return out;
}

double contraction_norm2_rr(const Kernel& f, const Kernel& g, int r) {
    const int q = f.order(), p = g.order();
    if (r < 1 || r > std::min(q, p))
        throw std::invalid_argument("contraction_norm2_rr: r out of range");
    if (2 * r >= std::min(q, p)) {
        // long join keys keep the direct table small; includes the scalar r=q=p case
        MultiIndexTable s = contract(f, g, r, r);
        return norm2(s) * norm2(s);
    }
    // short join keys explode the direct table; go through the duality
    // ||f *_r^r g||^2 = <f *_{q-r}^{q-r} f, g *_{p-r}^{p-r} g>
    MultiIndexTable a = contract(f, f, q - r, q - r);
    if (&f == &g || (q == p && f.canonical() == g.canonical()))
        return inner(a, a);
    MultiIndexTable b = contract(g, g, p - r, p - r);
    return inner(a, b);
}

Kernel kernel_from_table(const MultiIndexTable& t) {
    Kernel f(t.order());
    for (const auto& [k, v] : t.entries()) {
        if (!DiagonalMask::all_distinct(k)) {
            if (std::abs(v) > 1e-12)
                throw std::invalid_argument("kernel_from_table: table has diagonal mass");
            continue;
        }
        Tuple s = k;
        std::sort(s.begin(), s.end());
        double ref = t.value(k);
        (void)ref;
        f.set(s, v);  // symmetric table: every ordering carries the same value
    }
    return f;
}

TaqquCheck taqqu_check(const Kernel& f) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("taqqu_check: q >= 2 required");
    MultiIndexTable tens = contract(f, f, 0, 0);
    MultiIndexTable sym = symmetrize(tens);
    const double n2 = norm2(sym);
    TaqquCheck c;
    c.lhs = factorial(2 * q) * n2 * n2;
    const double fq = factorial(q);
    const double fn2 = f.norm2();
    c.rhs = 2.0 * (fq * fn2 * fn2) * (fq * fn2 * fn2);
    for (int r = 1; r <= q - 1; ++r) {
        MultiIndexTable fr = contract(f, f, r, r);
        double nr = norm2(fr);
        c.rhs += fq * fq * binomial(q, r) * binomial(q, r) * nr * nr;
    }
    return c;
}

StarRelations star_relations_check(const Kernel& f) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("star_relations_check: q >= 2 required");
    StarRelations s;
    s.norm_10 = norm2(contract(f, f, 1, 0));
    s.norm_q_qm1 = norm2(contract(f, f, q, q - 1));
    for (int r = 2; r <= q; ++r) {
        s.norm_r_rm1.push_back(norm2(contract(f, f, r, r - 1)));
        s.norm_rm1_rm1.push_back(norm2(contract(f, f, r - 1, r - 1)));
    }
    return s;
}

bool StarRelations::ok(double tol) const {
    if (std::abs(norm_10 - norm_q_qm1) > tol) return false;
    for (std::size_t i = 0; i < norm_r_rm1.size(); ++i)
        if (norm_r_rm1[i] > norm_rm1_rm1[i] + tol) return false;
    return true;
}

std::string kernel_to_json(const Kernel& f) {
    nlohmann::json j;
    j["order"] = f.order();
    auto entries = nlohmann::json::array();
    for (const auto& [t, v] : f.canonical())
        entries.push_back(nlohmann::json::array({t, v}));
    j["entries"] = entries;
    return j.dump();
}

Kernel kernel_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Kernel f(j.at("order").get<int>());
    for (const auto& e : j.at("entries"))
        f.set(e.at(0).get<Tuple>(), e.at(1).get<double>());
    return f;
}

}  // namespace radstein
