#pragma once

#include "parfront/reference.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace parfront {

// Pareto front of the points retrieved so far. The skyline keeps the maxima
// under weak coordinate-wise order, which is enough for all dominance
// queries; the full point list is kept for the final staircase.
class PhiFront {
public:
    // Returns whether p was strictly dominated by an earlier point.
    bool insert(int id, const Point& p) {
        all_.emplace_back(id, p);
        bool dom = strictly_dominates(p);
        auto it = sky_.lower_bound(p.x);
        tick(log_cost());
        if (it != sky_.end() && it->second >= p.y) return dom; // weakly covered
        if (it != sky_.end() && it->first == p.x) it = sky_.erase(it); // outgrown entry
        while (it != sky_.begin()) {
            auto prev = std::prev(it);
            tick();
            if (prev->second <= p.y)
                it = sky_.erase(prev);
            else
                break;
        }
        sky_.emplace_hint(it, p.x, p.y);
        return dom;
    }

    bool strictly_dominates(const Point& q) const {
        auto it = sky_.upper_bound(q.x);
        tick(log_cost());
        return it != sky_.end() && it->second > q.y;
    }

    Staircase staircase() const {
        std::vector<Point> pts;
        pts.reserve(all_.size());
        for (auto& [id, p] : all_) pts.push_back(p);
        return Staircase::of_points(std::move(pts));
    }

    const std::vector<std::pair<int, Point>>& points() const { return all_; }

private:
    std::uint64_t log_cost() const {
        std::uint64_t n = sky_.size() + 1, c = 1;
        while (n >>= 1) ++c;
        return c;
    }
    std::map<Rational, Rational> sky_;
    std::vector<std::pair<int, Point>> all_;
};

namespace detail {

// One maximal dominated interval along a layer staircase: the fictive point q
// is the coordinate-wise maximum of the retrieved points merged into it, and
// its open quadrant cuts exactly this interval out of the layer polyline.
struct DomInterval {
    std::size_t lo, hi; // dominated corner indices [lo, hi)
    Point q;
};

class LayerIntervals {
public:
    bool covers_all(std::size_t layer_size) const {
        if (items_.size() != 1) return false;
        const DomInterval& it = items_.begin()->second;
        return it.lo == 0 && it.hi == layer_size;
    }

    // Walk the live corners (those outside every stored interval).
    template <typename F>
    void for_each_live(const std::vector<LayerEntry>& layer, F&& fn) const {
        std::size_t pos = 0;
        for (const auto& [lo, iv] : items_) {
            for (; pos < iv.lo; ++pos) fn(layer[pos]);
            pos = std::max(pos, iv.hi);
        }
        for (; pos < layer.size(); ++pos) fn(layer[pos]);
    }

    void insert(const LayerDecomposition& ld, std::size_t li, Point q) {
        auto range = ld.dominated_corner_range(li, q);
        DomInterval nv{range.first, range.second, q};
        while (true) {
            auto it = items_.upper_bound(nv.lo);
            bool merged = false;
            if (it != items_.begin()) {
                auto prev = std::prev(it);
                if (overlaps(ld, li, prev->second, nv)) {
                    absorb(ld, li, nv, prev->second);
                    items_.erase(prev);
                    merged = true;
                }
            }
            if (!merged && it != items_.end() && overlaps(ld, li, it->second, nv)) {
                absorb(ld, li, nv, it->second);
                items_.erase(it);
                merged = true;
            }
            if (!merged) break;
        }
        if (!items_.emplace(nv.lo, nv).second)
            throw std::logic_error("dominated intervals out of order");
    }

    const std::map<std::size_t, DomInterval>& items() const { return items_; }
    void clear() { items_.clear(); }

private:
    static bool overlaps(const LayerDecomposition& ld, std::size_t li, const DomInterval& a,
                         const DomInterval& b) {
        // the polyline pieces overlap iff the joint-dominated part is nonempty
        return ld.quadrant_meets_layer(li, coord_min(a.q, b.q));
    }
    static void absorb(const LayerDecomposition& ld, std::size_t li, DomInterval& nv,
                       const DomInterval& other) {
        nv.q = coord_max(nv.q, other.q);
        auto range = ld.dominated_corner_range(li, nv.q);
        nv.lo = range.first;
        nv.hi = range.second;
    }

    std::map<std::size_t, DomInterval> items_;
};

} // namespace detail

// Stage 1 with the layered bookkeeping: every retrieval does one point
// location over the nested layer staircases and inserts one dominated
// interval into one deeper layer; finished layers push their intervals one
// layer down via the fictive points.
inline void process_layers(const LayerDecomposition& ld, Family& fam, RetrievalOracle& oracle,
                           const Staircase& ipf0, PhiFront& phi,
                           std::vector<std::pair<int, int>>& log, const RunOptions& opts) {
    std::vector<detail::LayerIntervals> intervals(ld.layer_count());
    for (std::size_t li = 0; li < ld.layer_count(); ++li) {
        const auto& layer = ld.layer(li);
        if (intervals[li].covers_all(layer.size())) break; // everything deeper is dominated
        if (opts.strict_checks) {
            // stored maximal intervals are separated by at least one corner,
            // whose liveness the retrieval asserts below
            const detail::DomInterval* prev = nullptr;
            for (const auto& [lo, iv] : intervals[li].items()) {
                if (prev)
                    detail::check_or_throw(prev->hi < iv.lo,
                                           "adjacent dominated intervals were not merged");
                prev = &iv;
            }
        }
        std::vector<int> live;
        intervals[li].for_each_live(layer, [&](const LayerEntry& e) { live.push_back(e.id); });
        for (int id : live) {
            if (opts.strict_checks)
                detail::check_or_throw(!phi.strictly_dominates(fam[id].shape.tr()),
                                       "live layer member already dominated");
            const bool degenerate = fam[id].shape.is_point();
            Point p = degenerate ? fam[id].shape.tr() : oracle.retrieve(fam, id);
            if (!degenerate) log.emplace_back(id, 1);
            bool dominated = phi.insert(id, p);
            if (opts.strict_checks)
                detail::check_or_throw(!ld.quadrant_meets_layer(li, p),
                                       "same-layer point reached its own staircase");
            if (dominated || ipf0.strictly_dominates(p)) continue; // inner-front discard
            std::size_t target = ld.locate_first_reached(p, std::ptrdiff_t(li));
            if (target < ld.layer_count()) intervals[target].insert(ld, target, p);
        }
        if (li + 1 < ld.layer_count()) {
            for (const auto& [lo, iv] : intervals[li].items()) {
                if (opts.strict_checks)
                    detail::check_or_throw(ld.quadrant_meets_layer(li + 1, iv.q),
                                           "propagated interval lost its portion");
                intervals[li + 1].insert(ld, li + 1, iv.q);
            }
            intervals[li].clear();
        }
    }
}

namespace detail {

// Stages 2 and 3 with preprocessing-friendly structures: stage 2 is a direct
// exact-predicate pass over the independent regions; stage 3 walks, per front
// vertex, only the independent corners inside the relevant quadrant.
inline void stage23_rayshoot(Family& fam, RetrievalOracle& oracle,
                             const std::vector<LayerEntry>& i_stair, const Staircase& phi,
                             const Staircase& ipf0, std::vector<std::pair<int, int>>& log) {
    Staircase certain = certain_domination_front(ipf0, phi);
    Staircase live = live_vertices(phi, certain);
    for (const LayerEntry& e : i_stair) {
        if (fam[e.id].retrieved) continue;
        if (stage2_must_retrieve(certain, live, fam[e.id].shape)) {
            oracle.retrieve(fam, e.id);
            log.emplace_back(e.id, 2);
        }
    }
    auto first_gt_x = [&](const Rational& x) {
        std::size_t lo = 0, hi = i_stair.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (i_stair[mid].tr.x <= x)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };
    auto first_y_le = [&](const Rational& y) {
        std::size_t lo = 0, hi = i_stair.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (i_stair[mid].tr.y > y)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };
    auto first_y_lt = [&](const Rational& y) {
        std::size_t lo = 0, hi = i_stair.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (i_stair[mid].tr.y >= y)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };
    for (const Point& p : live.points()) {
        // upward ray: candidates have corner x > p.x and corner y > p.y
        {
            std::size_t from = first_gt_x(p.x), to = first_y_le(p.y);
            for (std::size_t i = from; i < to; ++i) {
                int id = i_stair[i].id;
                if (fam[id].retrieved) continue;
                const Rect& r = fam[id].shape;
                tick();
                if (r.x_lo <= p.x) {
                    oracle.retrieve(fam, id);
                    log.emplace_back(id, 3);
                }
            }
        }
        // rightward ray: candidates have corner y > p.y and corner x > p.x
        {
            std::size_t from = first_gt_x(p.x), to = first_y_lt(p.y);
            for (std::size_t i = from; i < to; ++i) {
                int id = i_stair[i].id;
                if (fam[id].retrieved) continue;
                const Rect& r = fam[id].shape;
                tick();
                if (r.y_lo <= p.y && p.y < r.y_hi) {
                    oracle.retrieve(fam, id);
                    log.emplace_back(id, 3);
                }
            }
        }
    }
}

} // namespace detail

// Full reconstruction program for overlapping rectangles: layered stage 1,
// ray-based stages 2 and 3, then the front merge.
inline StrategyResult reconstruct_rectangles(const Preprocessed& pre, RetrievalOracle& oracle,
                                             const RunOptions& opts = {}) {
    StrategyResult res;
    CountScope scope(res.counters.comparisons);
    res.final_family = pre.family;
    Family& fam = res.final_family;
    const std::vector<int>& dep = pre.report.dependent;
    const std::vector<int>& ind = pre.report.independent;

    LayerDecomposition ld = LayerDecomposition::build(fam, dep);
    std::vector<LayerEntry> i_stair;
    i_stair.reserve(ind.size());
    for (int id : ind) i_stair.push_back(LayerEntry{fam[id].shape.tr(), id});
    std::sort(i_stair.begin(), i_stair.end(), [](const LayerEntry& a, const LayerEntry& b) {
        tick();
        if (a.tr.x != b.tr.x) return a.tr.x < b.tr.x;
        if (a.tr.y != b.tr.y) return a.tr.y > b.tr.y;
        return a.id < b.id;
    });

    PhiFront phi;
    process_layers(ld, fam, oracle, pre.ipf0, phi, res.log, opts);
    Staircase phi_stairs = phi.staircase();
    detail::stage23_rayshoot(fam, oracle, i_stair, phi_stairs, pre.ipf0, res.log);
    res.front = detail::build_final_front(fam, dep, ind);
    res.counters.retrievals = res.log.size();
    return res;
}

} // namespace parfront
