#pragma once

#include <map>
#include <string>

#include "radstein/multiindex.hpp"

namespace radstein {

// Symmetric kernel vanishing on diagonals, f in l0^2(N)^{circ q}.
// One value per sorted tuple; symmetry is expanded on read.
class Kernel {
  public:
    using Map = std::map<Tuple, double>;  // ordered map keeps serialization deterministic

    explicit Kernel(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("Kernel: order must be >= 1");
    }

    int order() const { return order_; }
    std::size_t support_size() const { return map_.size(); }
    const Map& canonical() const { return map_; }

    void set(Tuple t, double v) {
        if (static_cast<int>(t.size()) != order_)
            throw std::invalid_argument("Kernel: tuple length != order");
        for (Index i : t)
            if (i < 1) throw std::invalid_argument("Kernel: indices are 1-based positive");
        std::sort(t.begin(), t.end());
        if (!DiagonalMask::all_distinct(t)) {
            if (v != 0.0)
                throw std::invalid_argument("Kernel: nonzero value on a diagonal tuple");
            return;
        }
        if (v == 0.0) map_.erase(t);
        else map_[t] = v;
    }

    void add(Tuple t, double v) {
        std::sort(t.begin(), t.end());
        set(t, value_sorted(t) + v);
    }

    double value(Tuple t) const {
        std::sort(t.begin(), t.end());
        if (!DiagonalMask::all_distinct(t)) return 0.0;
        return value_sorted(t);
    }

    void scale(double c) {
        if (c == 0.0) { map_.clear(); return; }
        for (auto& [t, v] : map_) v *= c;
    }

    void prune(double eps) {
        for (auto it = map_.begin(); it != map_.end();) {
            if (std::abs(it->second) <= eps) it = map_.erase(it);
            else ++it;
        }
    }

    Index max_index() const {
        Index m = 0;
        for (const auto& [t, v] : map_)
            for (Index i : t) m = std::max(m, i);
        return m;
    }

    // All ordered tuples, q! entries per canonical one.
    MultiIndexTable expand() const;

    // l2 norm over ordered tuples: sqrt(q! * sum of canonical squares).
    double norm2() const;
    // raw sum of fourth powers over ordered tuples (the ||.||_{l4}^4 convention)
    double norm4() const;

    static double inner(const Kernel& f, const Kernel& g);  // over ordered tuples

  private:
    double value_sorted(const Tuple& t) const {
        auto it = map_.find(t);
        return it == map_.end() ? 0.0 : it->second;
    }
    int order_;
    Map map_;
};

// f *_r^l g: identify r variables, sum l of them over off-diagonal l-tuples.
// Output order q+p-r-l with coordinate blocks (i..., j..., k...); generally non-symmetric.
MultiIndexTable contract(const Kernel& f, const Kernel& g, int r, int l);

// ||f *_r^r g|| computed through <f *_{q-r}^{q-r} f, g *_{p-r}^{p-r} g>, which
// lets self-contractions with small r reuse the cheap large-r join.
double contraction_norm2_rr(const Kernel& f, const Kernel& g, int r);

// Kernel built from a symmetric table (which must vanish on diagonals).
Kernel kernel_from_table(const MultiIndexTable& symmetric_table);

struct TaqquCheck {
    double lhs;  // (2q)! ||sym(f tensor f)||^2
    double rhs;  // 2(q!||f||^2)^2 + sum_r (q!)^2 C(q,r)^2 ||f *_r^r f||^2
};
TaqquCheck taqqu_check(const Kernel& f);

struct StarRelations {
    double norm_10;            // ||f *_1^0 f||
    double norm_q_qm1;         // ||f *_q^{q-1} f||
    std::vector<double> norm_r_rm1;  // ||f *_r^{r-1} f||, r = 2..q
    std::vector<double> norm_rm1_rm1; // ||f *_{r-1}^{r-1} f||, r = 2..q
    bool ok(double tol = 1e-10) const;
};
StarRelations star_relations_check(const Kernel& f);

std::string kernel_to_json(const Kernel& f);
Kernel kernel_from_json(const std::string& text);

double binomial(int n, int k);
double factorial(int n);

}  // namespace radstein
