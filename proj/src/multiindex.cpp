#include "radstein/multiindex.hpp"

#include <cmath>
#include <numeric>

namespace radstein {

double norm2(const MultiIndexTable& t) {
    double s = 0.0;
    for (const auto& [k, v] : t.entries()) s += v * v;
    return std::sqrt(s);
}

double norm4(const MultiIndexTable& t) {
    double s = 0.0;
    for (const auto& [k, v] : t.entries()) s += v * v * v * v;
    return s;
}

double inner(const MultiIndexTable& s, const MultiIndexTable& t) {
    if (s.order() != t.order())
        throw std::invalid_argument("inner: order mismatch");
    const MultiIndexTable& a = s.size() <= t.size() ? s : t;
    const MultiIndexTable& b = s.size() <= t.size() ? t : s;
    double acc = 0.0;
    for (const auto& [k, v] : a.entries()) acc += v * b.value(k);
    return acc;
}

MultiIndexTable restrict(const MultiIndexTable& t, const DiagonalMask& mask,
                         bool keep_offdiagonal) {
    if (mask.arity != t.order())
        throw std::invalid_argument("restrict: mask arity != table order");
    MultiIndexTable out(t.order());
    for (const auto& [k, v] : t.entries())
        if (DiagonalMask::all_distinct(k) == keep_offdiagonal) out.set(k, v);
    return out;
}

MultiIndexTable symmetrize(const MultiIndexTable& raw) {
    const int q = raw.order();
    MultiIndexTable out(q);
    if (q <= 1) return raw;
    std::vector<int> perm(q);
    double fact = 1.0;
    for (int i = 2; i <= q; ++i) fact *= i;
    for (const auto& [t, v] : raw.entries()) {
        std::iota(perm.begin(), perm.end(), 0);
        const double w = v / fact;
        Tuple u(q);
        do {
            for (int i = 0; i < q; ++i) u[i] = t[perm[i]];
            out.add(u, w);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.prune(0.0);
    return out;
}

}  // namespace radstein
