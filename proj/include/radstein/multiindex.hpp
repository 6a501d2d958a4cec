#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace radstein {

using Index = std::int32_t;
using Tuple = std::vector<Index>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        // FNV-1a over the raw index words
        std::uint64_t h = 1469598103934665603ull;
        for (Index i : t) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(i));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Membership test for the off-diagonal set: all components pairwise distinct.
struct DiagonalMask {
    int arity;
    explicit DiagonalMask(int m) : arity(m) {
        if (m < 1) throw std::invalid_argument("DiagonalMask: arity must be positive");
    }
    bool contains(const Tuple& t) const {
        if (static_cast<int>(t.size()) != arity)
            throw std::invalid_argument("DiagonalMask: arity mismatch");
        return all_distinct(t);
    }
    static bool all_distinct(const Tuple& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (t[i] == t[j]) return false;
        return true;
    }
};

// Sparse real-valued function on ordered q-tuples. Zero entries are dropped.
class MultiIndexTable {
  public:
    using Map = std::unordered_map<Tuple, double, TupleHash>;

    explicit MultiIndexTable(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("MultiIndexTable: negative order");
    }

    int order() const { return order_; }
    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }
    const Map& entries() const { return map_; }

    void check_tuple(const Tuple& t) const {
        if (static_cast<int>(t.size()) != order_)
            throw std::invalid_argument("MultiIndexTable: tuple length != order");
        for (Index i : t)
            if (i < 1) throw std::invalid_argument("MultiIndexTable: indices are 1-based positive");
    }

    void set(const Tuple& t, double v) {
        check_tuple(t);
        if (v == 0.0) map_.erase(t);
        else map_[t] = v;
    }

    void add(const Tuple& t, double v) {
        check_tuple(t);
        auto it = map_.find(t);
        if (it == map_.end()) {
            if (v != 0.0) map_.emplace(t, v);
        } else {
            it->second += v;
            if (it->second == 0.0) map_.erase(it);
        }
    }

    double value(const Tuple& t) const {
        auto it = map_.find(t);
        return it == map_.end() ? 0.0 : it->second;
    }

    void prune(double eps = 0.0) {
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

  private:
    int order_;
    Map map_;
};

double norm2(const MultiIndexTable& t);           // sqrt(sum of squares)
double norm4(const MultiIndexTable& t);           // raw sum of fourth powers, i.e. ||.||_{l4}^4
double inner(const MultiIndexTable& s, const MultiIndexTable& t);

// Keep entries on off-diagonal tuples (keep_offdiagonal=true) or on the complement.
MultiIndexTable restrict(const MultiIndexTable& t, const DiagonalMask& mask,
                         bool keep_offdiagonal = true);

// Canonical symmetrization (1/q!) sum over permutations.
MultiIndexTable symmetrize(const MultiIndexTable& raw);

}  // namespace radstein
