#pragma once

#include <functional>
#include <map>
#include <string>

#include "radstein/kernel.hpp"
#include "radstein/rng.hpp"

namespace radstein {

// Finite +-1 configuration, 1-based.
class RademacherPoint {
  public:
    explicit RademacherPoint(int n, int fill = 1) : signs_(n, fill) {
        if (n < 0) throw std::invalid_argument("RademacherPoint: negative dimension");
        if (fill != 1 && fill != -1) throw std::invalid_argument("RademacherPoint: signs are +-1");
    }
    static RademacherPoint from_bits(int n, std::uint64_t bits) {
        RademacherPoint x(n);
        for (int k = 0; k < n; ++k) x.signs_[k] = (bits >> k) & 1 ? 1 : -1;
        return x;
    }
    static RademacherPoint random(int n, CounterRng& rng) {
        RademacherPoint x(n);
        for (int k = 0; k < n; ++k) x.signs_[k] = rng.next_sign();
        return x;
    }
    int dimension() const { return static_cast<int>(signs_.size()); }
    int operator[](int k) const {  // 1-based
        if (k < 1 || k > dimension()) throw std::invalid_argument("RademacherPoint: index out of range");
        return signs_[k - 1];
    }
    void set(int k, int sign) {
        if (k < 1 || k > dimension()) throw std::invalid_argument("RademacherPoint: index out of range");
        if (sign != 1 && sign != -1) throw std::invalid_argument("RademacherPoint: signs are +-1");
        signs_[k - 1] = sign;
    }
  private:
    std::vector<int> signs_;
};

inline RademacherPoint flip(const RademacherPoint& x, int k, int sign) {
    RademacherPoint y = x;
    y.set(k, sign);
    return y;
}

// F = constant + sum_q J_q(f_q); at most one kernel per order.
class ChaosExpansion {
  public:
    explicit ChaosExpansion(int dimension, double constant = 0.0)
        : dimension_(dimension), constant_(constant) {
        if (dimension < 0) throw std::invalid_argument("ChaosExpansion: negative dimension");
    }

    int dimension() const { return dimension_; }
    double constant() const { return constant_; }
    void set_constant(double c) { constant_ = c; }
    const std::map<int, Kernel>& terms() const { return terms_; }
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void set_term(const Kernel& f) {
        if (f.max_index() > dimension_)
            throw std::invalid_argument("ChaosExpansion: kernel index exceeds dimension");
        if (f.support_size() == 0) { terms_.erase(f.order()); return; }
        terms_.erase(f.order());
        terms_.emplace(f.order(), f);
    }
    void add_term(const Kernel& f) {
        auto it = terms_.find(f.order());
        if (it == terms_.end()) { set_term(f); return; }
        Kernel sum = it->second;
        for (const auto& [t, v] : f.canonical()) sum.add(t, v);
        terms_.erase(it);
        set_term(sum);
    }
    const Kernel* term(int q) const {
        auto it = terms_.find(q);
        return it == terms_.end() ? nullptr : &it->second;
    }
    bool pure() const { return constant_ == 0.0 && terms_.size() == 1; }

    void scale(double c) {
        constant_ *= c;
        for (auto& [q, f] : terms_) f.scale(c);
    }

  private:
    int dimension_;
    double constant_;
    std::map<int, Kernel> terms_;
};

double evaluate(const ChaosExpansion& F, const RademacherPoint& x);

// helper: single-term expansion J_q(f)
ChaosExpansion pure_chaos(int dimension, const Kernel& f);

// Multiplication formula: J_q(f) J_p(g) = sum_r r! C(q,r) C(p,r) J_{q+p-2r}(sym(f *_r^r g) 1_Delta)
ChaosExpansion chaos_multiply(const ChaosExpansion& F, const ChaosExpansion& G);

std::string expansion_to_json(const ChaosExpansion& F);
ChaosExpansion expansion_from_json(const std::string& text);

}  // namespace radstein
