#pragma once

#include "parfront/counters.hpp"
#include "parfront/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace parfront {

class FenwickCount {
public:
    explicit FenwickCount(std::size_t n) : tree_(n + 1, 0) {}
    void add(std::size_t i) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) {
            ++tree_[i];
            tick();
        }
    }
    void remove(std::size_t i) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) {
            --tree_[i];
            tick();
        }
    }
    // count of inserted indices < i
    std::int64_t prefix(std::size_t i) const {
        std::int64_t s = 0;
        for (; i > 0; i -= i & (~i + 1)) {
            s += tree_[i];
            tick();
        }
        return s;
    }

private:
    std::vector<std::int64_t> tree_;
};

// prefix maximum over int values, -1 when empty
class FenwickMax {
public:
    explicit FenwickMax(std::size_t n) : tree_(n + 1, -1) {}
    void update(std::size_t i, int v) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) {
            tree_[i] = std::max(tree_[i], v);
            tick();
        }
    }
    int prefix_max(std::size_t i) const {
        int m = -1;
        for (; i > 0; i -= i & (~i + 1)) {
            m = std::max(m, tree_[i]);
            tick();
        }
        return m;
    }

private:
    std::vector<int> tree_;
};

class RankTable {
public:
    explicit RankTable(std::vector<Rational> values) : sorted_(std::move(values)) {
        std::sort(sorted_.begin(), sorted_.end(),
                  [](const Rational& a, const Rational& b) {
                      tick();
                      return a < b;
                  });
        sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    }
    std::size_t size() const { return sorted_.size(); }
    // rank of the first value >= v
    std::size_t rank_ge(const Rational& v) const {
        std::size_t lo = 0, hi = sorted_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (sorted_[mid] < v)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
    // rank of the first value > v
    std::size_t rank_gt(const Rational& v) const {
        std::size_t lo = 0, hi = sorted_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (sorted_[mid] <= v)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
    std::size_t rank_exact(const Rational& v) const { return rank_ge(v); }

private:
    std::vector<Rational> sorted_;
};

// splitmix64: deterministic across platforms, used by all generators.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace parfront
