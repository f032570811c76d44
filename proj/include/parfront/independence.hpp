#pragma once

#include "parfront/family.hpp"
#include "parfront/oracles.hpp"
#include "parfront/util.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

namespace parfront {

// Representative facet points of a region relative to an inner-front
// staircase: the leftmost point of the top facet and the bottommost point of
// the right facet that are not strictly inside the inner front. Absent when
// the whole facet is strictly inside.
struct RepPoints {
    std::optional<Point> ell;  // on the top facet
    std::optional<Point> r_pt; // on the right facet
};

inline RepPoints representative_points(const Rect& r, const Staircase& ipf) {
    RepPoints out;
    // strictly-inside is monotone along each facet, so the admissible part is
    // a suffix of the top facet (to the right) and of the right facet (upward)
    Rational lx = r.x_lo;
    std::size_t p = ipf.first_y_le(r.y_hi); // ipf[0..p) have y > y_hi
    if (p > 0) lx = max(lx, ipf[p - 1].x);
    if (lx <= r.x_hi) out.ell = Point{lx, r.y_hi};
    Rational ry = r.y_lo;
    std::size_t q = ipf.first_x_gt(r.x_hi);
    if (q < ipf.size()) ry = max(ry, ipf[q].y);
    if (ry <= r.y_hi) out.r_pt = Point{r.x_hi, ry};
    return out;
}

// One region of the original family is dependent when some other region
// admits a point above the inner front that the first region's top-right
// corner dominates or that lies on the first region itself; the equivalent
// facet characterization is tested here pairwise. This is the quadratic
// oracle; the batched version below must agree with it exactly.
inline bool has_outgoing_dependency_naive(int a, const Family& f,
                                          const std::vector<int>& ids,
                                          const Staircase& ipf) {
    const Rect& ra = f[a].shape;
    const Point tra = ra.tr();
    auto not_inside = [&](const Point& p) { return !ipf.strictly_dominates(p); };
    // scan targets outward from the source so clustered dependencies exit early
    std::size_t center = 0;
    while (center < ids.size() && ids[center] < a) ++center;
    for (std::size_t step = 0; step <= 2 * ids.size(); ++step) {
        std::size_t idx;
        if (step % 2 == 0) {
            if (center + step / 2 >= ids.size()) continue;
            idx = center + step / 2;
        } else {
            if (std::size_t(step / 2 + 1) > center) continue;
            idx = center - step / 2 - 1;
        }
        int b = ids[idx];
        if (b == a) continue;
        const Rect& rb = f[b].shape;
        if (dominates(rb.tr(), tra)) continue; // target must not dominate the source
        RepPoints rep = representative_points(rb, ipf);
        if (rep.ell && dominates(tra, *rep.ell)) return true;
        if (rep.r_pt && dominates(tra, *rep.r_pt)) return true;
        // facet-facet contact at a point above the inner front
        // horizontal-horizontal: shared y, x-overlap; rightmost point is the
        // least-dominated one
        if (ra.y_hi == rb.y_hi) {
            Rational lo = max(ra.x_lo, rb.x_lo), hi = min(ra.x_hi, rb.x_hi);
            if (lo <= hi && not_inside(Point{hi, ra.y_hi})) return true;
        }
        // vertical-vertical: shared x, y-overlap; topmost point
        if (ra.x_hi == rb.x_hi) {
            Rational lo = max(ra.y_lo, rb.y_lo), hi = min(ra.y_hi, rb.y_hi);
            if (lo <= hi && not_inside(Point{ra.x_hi, hi})) return true;
        }
        // top of a against right of b and vice versa: single crossing points
        if (rb.x_hi >= ra.x_lo && rb.x_hi <= ra.x_hi && ra.y_hi >= rb.y_lo &&
            ra.y_hi <= rb.y_hi && not_inside(Point{rb.x_hi, ra.y_hi}))
            return true;
        if (ra.x_hi >= rb.x_lo && ra.x_hi <= rb.x_hi && rb.y_hi >= ra.y_lo &&
            rb.y_hi <= ra.y_hi && not_inside(Point{ra.x_hi, rb.y_hi}))
            return true;
    }
    return false;
}

// Partition of the original family: regions never on any front (filtered
// before the algorithms run), independent regions, and the dependent rest.
struct IndependenceReport {
    std::vector<int> dominated_in_f0;
    std::vector<int> independent; // I0
    std::vector<int> dependent;   // F1
};

namespace detail {

struct Seg {
    Rational fixed; // y for horizontal, x for vertical
    Rational lo, hi;
    int owner;
};

// counts, for every horizontal query segment, the vertical segments it
// intersects (closed), by sweeping the horizontal coordinate of the stab.
inline void stab_count(const std::vector<Seg>& vertical, const std::vector<Seg>& horizontal,
                       std::vector<int>& out_count) {
    struct Event {
        Rational key;
        int phase; // 0 activate, 1 query, 2 deactivate
        int idx;
    };
    std::vector<Event> ev;
    ev.reserve(vertical.size() * 2 + horizontal.size());
    for (int i = 0; i < int(vertical.size()); ++i) {
        ev.push_back({vertical[i].lo, 0, i});
        ev.push_back({vertical[i].hi, 2, i});
    }
    for (int i = 0; i < int(horizontal.size()); ++i) ev.push_back({horizontal[i].fixed, 1, i});
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        tick();
        if (a.key != b.key) return a.key < b.key;
        if (a.phase != b.phase) return a.phase < b.phase;
        return a.idx < b.idx;
    });
    std::vector<Rational> xs;
    xs.reserve(vertical.size());
    for (const Seg& s : vertical) xs.push_back(s.fixed);
    RankTable ranks(std::move(xs));
    FenwickCount fen(ranks.size());
    for (const Event& e : ev) {
        if (e.phase == 0)
            fen.add(ranks.rank_exact(vertical[e.idx].fixed));
        else if (e.phase == 2)
            fen.remove(ranks.rank_exact(vertical[e.idx].fixed));
        else {
            const Seg& q = horizontal[e.idx];
            std::int64_t c = fen.prefix(ranks.rank_gt(q.hi)) - fen.prefix(ranks.rank_ge(q.lo));
            out_count[q.owner] += int(c);
        }
    }
}

// same-orientation overlap counting: how many stored segments at the same
// fixed coordinate overlap the query interval (closed).
inline void same_axis_count(const std::vector<Seg>& segs, const std::vector<Seg>& queries,
                            std::vector<int>& out_count) {
    struct Group {
        std::vector<Rational> starts, ends;
    };
    std::vector<std::pair<Rational, Group>> groups;
    {
        std::vector<const Seg*> sorted;
        sorted.reserve(segs.size());
        for (const Seg& s : segs) sorted.push_back(&s);
        std::sort(sorted.begin(), sorted.end(), [](const Seg* a, const Seg* b) {
            tick();
            return a->fixed < b->fixed;
        });
        for (const Seg* s : sorted) {
            if (groups.empty() || !(groups.back().first == s->fixed))
                groups.push_back({s->fixed, {}});
            groups.back().second.starts.push_back(s->lo);
            groups.back().second.ends.push_back(s->hi);
        }
        for (auto& [y, g] : groups) {
            std::sort(g.starts.begin(), g.starts.end());
            std::sort(g.ends.begin(), g.ends.end());
        }
    }
    auto find_group = [&](const Rational& y) -> const Group* {
        std::size_t lo = 0, hi = groups.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (groups[mid].first < y)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < groups.size() && groups[lo].first == y) return &groups[lo].second;
        return nullptr;
    };
    for (const Seg& q : queries) {
        const Group* g = find_group(q.fixed);
        if (!g) continue;
        auto starts_le = std::upper_bound(g->starts.begin(), g->starts.end(), q.hi,
                                          [](const Rational& v, const Rational& e) {
                                              tick();
                                              return v < e;
                                          }) -
                         g->starts.begin();
        auto ends_lt = std::lower_bound(g->ends.begin(), g->ends.end(), q.lo,
                                        [](const Rational& e, const Rational& v) {
                                            tick();
                                            return e < v;
                                        }) -
                       g->ends.begin();
        out_count[q.owner] += int(starts_le - ends_lt);
    }
}

} // namespace detail

// Batched classification of the filtered family: one dominance-counting sweep
// over the representative points, plus intersection counting over the
// admissible (not-strictly-inside) parts of the top/right facets treated as
// width-0 closed rectangles. Every region contributes exactly four
// self-intersections; more than four means a facet-facet dependency.
inline std::vector<char> independent_flags_fast(const Family& f, const std::vector<int>& ids,
                                                const Staircase& ipf) {
    const int n = int(f.size());
    std::vector<char> independent(n, 0);

    // case 1: some top-right corner strictly dominates a representative point
    struct Q {
        Point tr;
        int owner;
    };
    std::vector<Point> reps;
    std::vector<Q> queries;
    for (int id : ids) {
        RepPoints rp = representative_points(f[id].shape, ipf);
        assert(rp.ell && rp.r_pt); // filtered families keep their TR corners outside
        reps.push_back(*rp.ell);
        reps.push_back(*rp.r_pt);
        queries.push_back({f[id].shape.tr(), id});
    }
    std::vector<char> case1(n, 0);
    {
        std::sort(reps.begin(), reps.end(), [](const Point& a, const Point& b) {
            tick();
            return a.x < b.x;
        });
        std::sort(queries.begin(), queries.end(), [](const Q& a, const Q& b) {
            tick();
            return a.tr.x < b.tr.x;
        });
        std::vector<Rational> ys;
        ys.reserve(reps.size());
        for (const Point& p : reps) ys.push_back(p.y);
        RankTable ranks(std::move(ys));
        FenwickCount fen(ranks.size());
        std::size_t next = 0;
        for (const Q& q : queries) {
            while (next < reps.size() && reps[next].x < q.tr.x) {
                fen.add(ranks.rank_exact(reps[next].y));
                ++next;
            }
            if (fen.prefix(ranks.rank_ge(q.tr.y)) > 0) case1[q.owner] = 1;
        }
    }

    // case 2: admissible facet parts as segments; count pairwise contacts
    std::vector<detail::Seg> horiz, vert;
    for (int id : ids) {
        RepPoints rp = representative_points(f[id].shape, ipf);
        const Rect& r = f[id].shape;
        horiz.push_back({r.y_hi, rp.ell->x, r.x_hi, id});
        vert.push_back({r.x_hi, rp.r_pt->y, r.y_hi, id});
    }
    std::vector<int> contact(n, 0);
    detail::same_axis_count(horiz, horiz, contact);
    detail::same_axis_count(vert, vert, contact);
    detail::stab_count(vert, horiz, contact); // vertical segments hit by top facets
    detail::stab_count(horiz, vert, contact); // horizontal segments hit by right facets
    for (int id : ids) independent[id] = !case1[id] && contact[id] <= 4;
    return independent;
}

inline IndependenceReport preprocess_family(const Family& f, bool use_fast = true) {
    IndependenceReport rep;
    Staircase ipf0 = f.inner_front_staircase();
    std::vector<int> kept;
    for (int id = 0; id < int(f.size()); ++id) {
        if (ipf0.strictly_dominates(f[id].shape.tr()))
            rep.dominated_in_f0.push_back(id);
        else
            kept.push_back(id);
    }
    // the discarded regions' bottom-left corners are never maximal, so the
    // inner front of the kept family is the same staircase
    std::vector<char> indep;
    if (use_fast) {
        indep = independent_flags_fast(f, kept, ipf0);
    } else {
        indep.assign(f.size(), 0);
        for (int id : kept)
            indep[id] = !has_outgoing_dependency_naive(id, f, kept, ipf0);
    }
    for (int id : kept)
        (indep[id] ? rep.independent : rep.dependent).push_back(id);
    return rep;
}

// Regions of the current family (all of it, retrieved entries included as
// point regions) with no outgoing dependency right now. Only unretrieved
// regions that are not already dominated for good qualify: a region whose
// corner fell inside the current inner front sheds its dependencies
// trivially, and the four-per-retrieval growth bound counts live regions.
inline std::vector<int> semi_independent_set(const Family& f, const std::vector<int>& ids) {
    Staircase ipf = f.inner_front_staircase(ids);
    std::vector<int> out;
    for (int id : ids) {
        if (f[id].retrieved) continue;
        if (ipf.strictly_dominates(f[id].shape.tr())) continue;
        if (!has_outgoing_dependency_naive(id, f, ids, ipf)) out.push_back(id);
    }
    return out;
}

struct Preprocessed {
    Family family; // working copy, original shapes
    IndependenceReport report;
    Staircase ipf0; // inner front of the original family
};

inline Preprocessed preprocess(const std::vector<Rect>& regions, bool use_fast = true) {
    Preprocessed p{Family(regions), {}, {}};
    p.ipf0 = p.family.inner_front_staircase();
    p.report = preprocess_family(p.family, use_fast);
    return p;
}

} // namespace parfront
