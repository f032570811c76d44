#pragma once

#include "parfront/unit_squares.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace parfront {

namespace detail {

inline std::int64_t ab_count(const GridOverlay& g, CellKey key) {
    auto it = g.cells.find(key);
    if (it == g.cells.end()) return 0;
    return std::int64_t(it->second.a_ids.size() + it->second.b_ids.size());
}

} // namespace detail

// Sum over the non-empty cells of t * log2(2 + t) with t = |A of the cell| +
// |AB of the three upper/right neighbours|; the grid-based universal
// lower-bound quantity (no hidden constant, consumers scale it themselves).
inline double grid_lower_bound(const GridOverlay& g) {
    double sum = 0;
    for (const auto& [key, cell] : g.cells) {
        const auto [i, j] = key;
        std::int64_t t = std::int64_t(cell.a_ids.size()) + detail::ab_count(g, {i + 1, j}) +
                         detail::ab_count(g, {i, j + 1}) + detail::ab_count(g, {i + 1, j + 1});
        if (t > 0) sum += double(t) * std::log2(2.0 + double(t));
    }
    return sum;
}

// Same shape with t = |AB of the cell and its three upper/right neighbours|,
// summed over every cell the sweep would process: the per-cell work budget.
inline double cell_work_bound(const GridOverlay& g) {
    std::map<CellKey, std::int64_t> t;
    for (const auto& [key, cell] : g.cells) {
        const auto [i, j] = key;
        const std::int64_t ab = std::int64_t(cell.a_ids.size() + cell.b_ids.size());
        if (ab == 0) continue;
        t[key] += ab;
        t[{i - 1, j}] += ab;
        t[{i, j - 1}] += ab;
        t[{i - 1, j - 1}] += ab;
    }
    double sum = 0;
    for (const auto& [key, v] : t)
        if (v > 0) sum += double(v) * std::log2(2.0 + double(v));
    return sum;
}

inline double per_cell_t_sum(const WorkCounters& c) {
    double sum = 0;
    for (const auto& [key, v] : c.per_cell_t)
        if (v > 0) sum += double(v) * std::log2(2.0 + double(v));
    return sum;
}

// Intervals [a_i, b_i] within [0, m], each of length at least 1.
struct IntervalSystem {
    std::vector<std::pair<Rational, Rational>> intervals;
    Rational m;

    void validate() const {
        for (const auto& [a, b] : intervals) {
            if (b - a < Rational(1)) throw std::invalid_argument("interval shorter than 1");
            if (a < Rational(0) || m < b) throw std::invalid_argument("interval outside [0, m]");
        }
    }
    std::size_t k() const { return intervals.size(); }
};

// Number of linear orders realizable by strictly increasing choices
// z_{pi(1)} < ... < z_{pi(k)} with z_i in [a_i, b_i]. Feasibility per
// permutation by greedy minimal assignment; openness of the running lower
// bound is tracked symbolically instead of via epsilons. Exponential oracle,
// refuses k > 8.
inline std::int64_t realizable_orders(const IntervalSystem& s) {
    const int k = int(s.k());
    if (k > 8) throw std::invalid_argument("realizable_orders: k > 8");
    if (k == 0) return 1;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::int64_t count = 0;
    do {
        Rational value = s.intervals[perm[0]].first;
        bool open = false;
        bool ok = true;
        for (int i = 1; i < k && ok; ++i) {
            const auto& [a, b] = s.intervals[perm[i]];
            if (a > value) {
                value = a;
                open = false;
            } else {
                open = true; // need z strictly above the running value
            }
            if (open ? !(value < b) : !(value <= b)) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// sum log2(b_i - a_i) <= log2 |Z| + k log2(e m / k), checked in double with a
// 2^-30 slack absorbing the rounding of the transcendental terms.
inline bool interval_lemma_check(const IntervalSystem& s) {
    s.validate();
    const int k = int(s.k());
    if (k == 0) return true;
    double lhs = 0;
    for (const auto& [a, b] : s.intervals) lhs += std::log2((b - a).to_double());
    const double e = 2.718281828459045235;
    double rhs = std::log2(double(realizable_orders(s))) +
                 double(k) * std::log2(e * s.m.to_double() / double(k));
    return lhs <= rhs + std::ldexp(1.0, -30);
}

} // namespace parfront
