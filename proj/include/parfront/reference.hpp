#pragma once

#include "parfront/independence.hpp"
#include "parfront/layers.hpp"
#include "parfront/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace parfront {

struct RunOptions {
    bool strict_checks = false; // enable the internal invariant assertions
};

struct StrategyResult {
    std::vector<std::pair<int, int>> log; // (region id, stage)
    Family final_family;
    FrontResult front;
    WorkCounters counters;

    std::vector<int> retrieved_ids() const {
        std::vector<int> v;
        v.reserve(log.size());
        for (auto& [id, st] : log) v.push_back(id);
        return v;
    }
    std::vector<int> stage_ids(int stage) const {
        std::vector<int> v;
        for (auto& [id, st] : log)
            if (st == stage) v.push_back(id);
        std::sort(v.begin(), v.end());
        return v;
    }
    std::vector<int> sorted_ids() const {
        auto v = retrieved_ids();
        std::sort(v.begin(), v.end());
        return v;
    }
};

namespace detail {

inline void check_or_throw(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

// Area dominated under every realization of the current family: the original
// bottom-left corners joined with the points retrieved in stage 1 (a
// retrieved region's point only grows the area its corner already covered).
inline Staircase certain_domination_front(const Staircase& ipf0, const Staircase& phi) {
    std::vector<Point> pts = ipf0.points();
    const auto& more = phi.points();
    pts.insert(pts.end(), more.begin(), more.end());
    return Staircase::of_points(std::move(pts));
}

// An independent region must be retrieved exactly when leaving it imprecise
// keeps the front ambiguous: either its placements straddle the certain
// domination boundary (bottom-left corner strictly inside, top-right corner
// not), or a stage-1 staircase vertex lies on the region, so coincidence
// with a front point is attainable.
inline bool stage2_must_retrieve(const Staircase& certain, const Staircase& phi, const Rect& r) {
    if (certain.strictly_dominates(r.bl()) && !certain.strictly_dominates(r.tr())) return true;
    if (!r.is_point() && phi.has_vertex_in_rect(r)) return true;
    return false;
}

// The stage-1 staircase restricted to vertices that can still appear on a
// front: a vertex strictly inside the certain-domination area is off the
// front in every realization and triggers neither coincidence checks nor
// ray retrievals.
inline Staircase live_vertices(const Staircase& phi, const Staircase& certain) {
    std::vector<Point> live;
    for (const Point& p : phi.points())
        if (!certain.strictly_dominates(p)) live.push_back(p);
    return Staircase(std::move(live));
}

// Stages 2 and 3 over the independent regions, shared by both reference
// strategies. phi is the staircase of the stage-1 points. A stage-3 ray
// retrieval is skipped when the ray only grazes the region at its
// bottom-right (upward) or top-left (rightward) corner line: the revealed
// point could never displace the front vertex.
inline void run_stages_2_3(Family& fam, RetrievalOracle& oracle, const std::vector<int>& i_ids,
                           const Staircase& phi, const Staircase& ipf0,
                           std::vector<std::pair<int, int>>& log) {
    Staircase certain = certain_domination_front(ipf0, phi);
    Staircase live = live_vertices(phi, certain);
    for (int id : i_ids) {
        if (fam[id].retrieved) continue;
        if (stage2_must_retrieve(certain, live, fam[id].shape)) {
            oracle.retrieve(fam, id);
            log.emplace_back(id, 2);
        }
    }
    for (const Point& p : live.points()) {
        for (int id : i_ids) {
            if (fam[id].retrieved) continue;
            const Rect& r = fam[id].shape;
            bool up_hit = r.x_lo <= p.x && p.x < r.x_hi && r.y_hi > p.y;
            bool right_hit = r.y_lo <= p.y && p.y < r.y_hi && r.x_hi > p.x;
            if (up_hit || right_hit) {
                oracle.retrieve(fam, id);
                log.emplace_back(id, 3);
            }
        }
    }
}

// Front of the finished family: candidates are the point-shaped dependent
// entries (retrieved or degenerate inputs) and the independent entries; a
// candidate is off the front exactly when some candidate's bottom-left
// corner dominates its top-right corner.
inline FrontResult build_final_front(const Family& fam, const std::vector<int>& dep_ids,
                                     const std::vector<int>& i_ids) {
    std::vector<int> cand;
    for (int id : dep_ids)
        if (fam[id].shape.is_point()) cand.push_back(id);
    for (int id : i_ids) cand.push_back(id);
    std::vector<Point> bls;
    bls.reserve(cand.size());
    for (int id : cand) bls.push_back(fam[id].shape.bl());
    Staircase dominators = Staircase::of_points(std::move(bls));
    FrontResult out;
    for (int id : cand)
        if (!dominators.strictly_dominates(fam[id].shape.tr()))
            out.members.push_back({id, fam[id].shape});
    std::sort(out.members.begin(), out.members.end(),
              [](const FrontMember& a, const FrontMember& b) {
                  if (a.shape.x_hi != b.shape.x_hi) return a.shape.x_hi < b.shape.x_hi;
                  if (a.shape.y_hi != b.shape.y_hi) return a.shape.y_hi > b.shape.y_hi;
                  return a.id < b.id;
              });
    return out;
}

// Staircase of the dependent entries that are points by now: retrieved ones
// plus degenerate inputs, which are known without any retrieval.
inline Staircase front_of_points(const Family& fam, const std::vector<int>& dep_ids) {
    std::vector<Point> pts;
    for (int id : dep_ids)
        if (fam[id].shape.is_point()) pts.push_back(fam[id].shape.tr());
    return Staircase::of_points(std::move(pts));
}

} // namespace detail

// Three-stage reference strategy. Stage 1 retrieves any non-point region on
// the outer front of the dependent family (smallest id first); stages 2 and 3
// resolve the independent regions against the staircase of retrieved points.
// Simplicity-first: quadratic-ish recomputation is fine here.
inline StrategyResult run_algorithm1(const Preprocessed& pre, RetrievalOracle& oracle,
                                     const RunOptions& opts = {}) {
    StrategyResult res;
    res.final_family = pre.family;
    Family& fam = res.final_family;
    const std::vector<int>& dep = pre.report.dependent;
    const std::vector<int>& ind = pre.report.independent;

    while (true) {
        std::vector<Point> trs;
        trs.reserve(dep.size());
        for (int id : dep) trs.push_back(fam[id].shape.tr());
        Staircase opf = Staircase::of_points(trs);
        int pick = -1;
        for (int id : dep) {
            if (fam[id].shape.is_point()) continue; // nothing left to reveal
            if (!opf.strictly_dominates(fam[id].shape.tr())) {
                pick = id;
                break; // dep is ascending, so this is the smallest id
            }
        }
        if (pick < 0) break;
        oracle.retrieve(fam, pick);
        res.log.emplace_back(pick, 1);
    }
    if (opts.strict_checks) {
        // after stage 1 every dependent region is a point or dominated
        Staircase phi = detail::front_of_points(fam, dep);
        for (int id : dep)
            if (!fam[id].shape.is_point())
                detail::check_or_throw(phi.strictly_dominates(fam[id].shape.tr()),
                                       "stage 1 left an undominated region");
    }
    Staircase phi = detail::front_of_points(fam, dep);
    detail::run_stages_2_3(fam, oracle, ind, phi, pre.ipf0, res.log);
    res.front = detail::build_final_front(fam, dep, ind);
    res.counters.retrievals = res.log.size();
    return res;
}

// Layered variant: stage 1 walks the static layer decomposition in order and
// retrieves the live members of each layer; stages 2 and 3 are unchanged.
inline StrategyResult run_algorithm1_2(const Preprocessed& pre, RetrievalOracle& oracle,
                                       const RunOptions& opts = {}) {
    StrategyResult res;
    res.final_family = pre.family;
    Family& fam = res.final_family;
    const std::vector<int>& dep = pre.report.dependent;
    const std::vector<int>& ind = pre.report.independent;

    std::vector<std::vector<int>> layers = peel_layers(fam, dep);
    std::vector<Point> phi_pts;
    for (const auto& layer : layers) {
        std::vector<int> order(layer);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const Point ta = fam[a].shape.tr(), tb = fam[b].shape.tr();
            if (ta.x != tb.x) return ta.x < tb.x;
            if (ta.y != tb.y) return ta.y > tb.y;
            return a < b;
        });
        Staircase phi = Staircase::of_points(phi_pts);
        for (int id : order) {
            if (fam[id].retrieved) continue;
            if (phi.strictly_dominates(fam[id].shape.tr())) continue; // dominated in F
            if (opts.strict_checks) {
                // the member is on the outer front of the current family
                std::vector<Point> trs;
                for (int o : dep)
                    trs.push_back(fam[o].shape.tr());
                detail::check_or_throw(
                    !Staircase::of_points(trs).strictly_dominates(fam[id].shape.tr()),
                    "active layer member not on the outer front");
                // points retrieved within this layer cannot have dominated it
                Staircase fresh = Staircase::of_points(phi_pts);
                detail::check_or_throw(!fresh.strictly_dominates(fam[id].shape.tr()),
                                       "same-layer point dominated a layer member");
            }
            if (fam[id].shape.is_point()) {
                // degenerate input: already revealed, still shapes the fronts
                phi_pts.push_back(fam[id].shape.tr());
                continue;
            }
            Point p = oracle.retrieve(fam, id);
            res.log.emplace_back(id, 1);
            phi_pts.push_back(p);
            // points from this layer cannot dominate its other members, so
            // the stale staircase stays valid for the rest of the layer
        }
    }
    Staircase phi = detail::front_of_points(fam, dep);
    detail::run_stages_2_3(fam, oracle, ind, phi, pre.ipf0, res.log);
    res.front = detail::build_final_front(fam, dep, ind);
    res.counters.retrievals = res.log.size();
    return res;
}

} // namespace parfront
