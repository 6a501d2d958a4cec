#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace radstein {

// Finite-support probability law with sorted atoms and prefix-sum CDF.
class AtomicDistribution {
  public:
    AtomicDistribution() = default;
    // merges equal values; masses must be nonnegative and sum to 1 within 1e-9
    explicit AtomicDistribution(std::vector<std::pair<double, double>> atoms,
                                bool normalize = false) {
        std::sort(atoms.begin(), atoms.end());
        double total = 0.0;
        for (const auto& [x, p] : atoms) {
            if (p < 0.0) throw std::invalid_argument("AtomicDistribution: negative mass");
            total += p;
            if (!atoms_.empty() && atoms_.back().first == x)
                atoms_.back().second += p;
            else
                atoms_.emplace_back(x, p);
        }
        if (normalize) {
            if (total <= 0.0) throw std::invalid_argument("AtomicDistribution: zero total mass");
            for (auto& [x, p] : atoms_) p /= total;
        } else if (std::abs(total - 1.0) > 1e-9) {
            throw std::invalid_argument("AtomicDistribution: masses do not sum to 1");
        }
        cum_.resize(atoms_.size());
        double c = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            c += atoms_[i].second;
            cum_[i] = c;
        }
        if (!cum_.empty()) cum_.back() = 1.0;
    }

    std::size_t size() const { return atoms_.size(); }
    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

    // P(X <= x)
    double cdf(double x) const {
        auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                   [](double a, const auto& b) { return a < b.first; });
        if (it == atoms_.begin()) return 0.0;
        return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
    }

    // P(X < x), the left limit of the CDF
    double cdf_left(double x) const {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                   [](const auto& a, double b) { return a.first < b; });
        if (it == atoms_.begin()) return 0.0;
        return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
    }

    // P(lo < X <= hi), half open
    double interval(double lo, double hi) const {
        if (hi <= lo) return 0.0;
        return cdf(hi) - cdf(lo);
    }

    double mass_at(double x) const { return cdf(x) - cdf_left(x); }

  private:
    std::vector<std::pair<double, double>> atoms_;
    std::vector<double> cum_;
};

}  // namespace radstein
