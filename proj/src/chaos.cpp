#include "radstein/chaos.hpp"

#include <json.hpp>

namespace radstein {

double evaluate(const ChaosExpansion& F, const RademacherPoint& x) {
    if (x.dimension() < F.dimension())
        throw std::invalid_argument("evaluate: point dimension below expansion dimension");
    double acc = F.constant();
    for (const auto& [q, f] : F.terms()) {
        double s = 0.0;
        for (const auto& [t, v] : f.canonical()) {
            double prod = v;
            for (Index i : t) prod *= x[i];
            s += prod;  // canonical tuples are exactly the increasing ones
        }
        acc += factorial(q) * s;
    }
    return acc;
}

ChaosExpansion pure_chaos(int dimension, const Kernel& f) {
    ChaosExpansion F(dimension);
    F.set_term(f);
    return F;
}

ChaosExpansion chaos_multiply(const ChaosExpansion& F, const ChaosExpansion& G) {
    if (!F.pure() || !G.pure())
        throw std::invalid_argument("chaos_multiply: both inputs must be single pure chaos terms");
    const Kernel& f = F.terms().begin()->second;
    const Kernel& g = G.terms().begin()->second;
    const int q = f.order(), p = g.order();
    const int n = std::max(F.dimension(), G.dimension());
    ChaosExpansion out(n);
    for (int r = 0; r <= std::min(q, p); ++r) {
        const double coeff = factorial(r) * binomial(q, r) * binomial(p, r);
        const int m = q + p - 2 * r;
        MultiIndexTable c = contract(f, g, r, r);
        if (m == 0) {
            // scalar term r = q = p
            out.set_constant(out.constant() + coeff * c.value(Tuple{}));
            continue;
        }
        MultiIndexTable sym = restrict(symmetrize(c), DiagonalMask(m), true);
        Kernel h = kernel_from_table(sym);
        h.scale(coeff);
        if (h.support_size() > 0) out.add_term(h);
    }
    return out;
}

std::string expansion_to_json(const ChaosExpansion& F) {
    nlohmann::json j;
    j["dimension"] = F.dimension();
    j["constant"] = F.constant();
    auto terms = nlohmann::json::array();
    for (const auto& [q, f] : F.terms()) {
        nlohmann::json term;
        term["order"] = q;
        term["kernel"] = nlohmann::json::parse(kernel_to_json(f));
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j.dump();
}

ChaosExpansion expansion_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ChaosExpansion F(j.at("dimension").get<int>(), j.at("constant").get<double>());
    for (const auto& term : j.at("terms"))
        F.set_term(kernel_from_json(term.at("kernel").dump()));
    return F;
}

}  // namespace radstein
