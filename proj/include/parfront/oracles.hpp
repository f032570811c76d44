#pragma once

#include "parfront/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace parfront {

// Per-region classification over all realizations of the current family.
// A region is "always" when its point is maximal in every realization and
// "dominated" when it is maximal in none. Both reduce to corner tests against
// the other regions (adversary extremes are attained at corners of closed
// axis-aligned rectangles; the oracle is rectangle-only by construction).
struct AlwaysDominated {
    std::vector<char> always;
    std::vector<char> dominated;
};

inline AlwaysDominated classify_always_dominated(const Family& f) {
    const std::size_t n = f.size();
    AlwaysDominated out{std::vector<char>(n, 1), std::vector<char>(n, 0)};
    for (std::size_t a = 0; a < n; ++a) {
        const Rect& ra = f[a].shape;
        bool dominated = false;
        for (std::size_t b = 0; b < n && !dominated; ++b) {
            if (b == a) continue;
            if (dominates(f[b].shape.bl(), ra.tr())) dominated = true;
        }
        out.dominated[a] = dominated;
        bool always = !dominated;
        for (std::size_t b = 0; b < n && always; ++b) {
            if (b == a) continue;
            if (dominates(f[b].shape.tr(), ra.bl())) always = false;
        }
        out.always[a] = always;
    }
    return out;
}

// Which of the three staircase relations (a before b, b before a, coincident)
// are attainable for a pair of always-regions. The precedence predicate is a
// disjunction of per-coordinate strict comparisons, so attainability reduces
// to interval comparisons; coincidence is attainable exactly when both
// coordinate ranges overlap.
struct PairRelations {
    bool a_before_b;
    bool b_before_a;
    bool coincident;
    int attainable() const { return int(a_before_b) + int(b_before_a) + int(coincident); }
};

inline PairRelations pair_relations(const Rect& a, const Rect& b) {
    PairRelations r{};
    r.a_before_b = a.x_lo < b.x_hi || a.y_hi > b.y_lo;
    r.b_before_a = b.x_lo < a.x_hi || b.y_hi > a.y_lo;
    r.coincident = a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
    return r;
}

// A family is finished when every realization induces the same front order:
// every region is always or dominated, and every pair of always regions has
// exactly one attainable relation.
inline bool finished(const Family& f) {
    AlwaysDominated cls = classify_always_dominated(f);
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!cls.always[i] && !cls.dominated[i]) return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (!cls.always[a]) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!cls.always[b]) continue;
            if (pair_relations(f[a].shape, f[b].shape).attainable() != 1) return false;
        }
    }
    return true;
}

// Front of a finished family: the always regions in staircase order, ties by
// id. For unfinished families the result is meaningless.
inline FrontResult finished_front(const Family& f) {
    AlwaysDominated cls = classify_always_dominated(f);
    FrontResult out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (cls.always[i]) out.members.push_back({int(i), f[i].shape});
    std::sort(out.members.begin(), out.members.end(),
              [](const FrontMember& a, const FrontMember& b) {
                  if (a.shape.x_hi != b.shape.x_hi) return a.shape.x_hi < b.shape.x_hi;
                  if (a.shape.y_hi != b.shape.y_hi) return a.shape.y_hi > b.shape.y_hi;
                  return a.id < b.id;
              });
    return out;
}

// Minimum number of retrievals to reach a finished family, by increasing-size
// subset enumeration; exponential by design, refuses beyond the budget.
struct MinRetrievals {
    int count;
    std::vector<int> witness; // one minimum subset, lexicographically first
};

inline std::optional<MinRetrievals> min_retrievals(const Family& f0,
                                                   const std::vector<Point>& realization,
                                                   int budget = 10) {
    const int n = int(f0.size());
    if (n > budget) return std::nullopt;
    for (int k = 0; k <= n; ++k) {
        // lexicographically first k-subset first
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Family trial = f0;
            for (int i : idx) trial.apply_retrieval(i, realization[i]);
            if (finished(trial)) return MinRetrievals{k, idx};
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return MinRetrievals{n, {}}; // retrieving everything always finishes
}

} // namespace parfront
