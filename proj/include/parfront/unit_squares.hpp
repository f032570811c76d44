#pragma once

#include "parfront/finger_tree.hpp"
#include "parfront/recon_rectangles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace parfront {

using CellKey = std::pair<std::int64_t, std::int64_t>;

// Grid overlay for congruent squares: cells keyed by their bottom-left index,
// regions associated to the cell holding their top-right corner, classified
// by how the cell meets the inner front of the dependent family.
struct GridOverlay {
    struct Cell {
        std::vector<int> a_ids, b_ids, c_ids;
        std::vector<Point> crossings; // inner-front boundary on the cell boundary
    };

    Rational side;
    Rational off; // same offset on both axes; no region corner lies on a line
    Staircase ipf1;
    std::vector<Point> concave; // concave corners of ipf1, ascending x
    std::map<CellKey, Cell> cells;
    // the non-empty cells hug the inner front in a narrow band; these orders
    // give neighbour navigation and the top-right-to-bottom-left sweep
    std::vector<CellKey> band_by_diag;     // sorted by j - i descending
    std::vector<CellKey> band_by_antidiag; // sorted by i + j descending

    Rational line(std::int64_t k) const { return off + Rational(k) * side; }
    CellKey cell_of(const Point& p) const {
        return {(p.x - off).floor_div(side), (p.y - off).floor_div(side)};
    }
};

namespace detail {

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

// Crossing of the staircase polyline with the horizontal line y = h, if any:
// the unique drop that passes through that height.
inline std::optional<Point> polyline_cross_horizontal(const Staircase& st, const Rational& h) {
    std::size_t idx = st.first_y_le(h);
    if (idx == 0) return std::nullopt; // the line is above the whole staircase
    if (idx < st.size() && !(st[idx].y < h)) return std::nullopt;
    return Point{st[idx - 1].x, h};
}

// Crossing with the vertical line x = w: the unique run through that abscissa.
inline std::optional<Point> polyline_cross_vertical(const Staircase& st, const Rational& w) {
    std::size_t idx = st.first_x_ge(w);
    if (idx == st.size()) return std::nullopt; // right of the down-tail
    return Point{w, st[idx].y};
}

} // namespace detail

// Builds the grid and classifies every dependent region as type A (cell away
// from the inner front), B (region contains a boundary crossing point of its
// cell), or C (the rest). Rejects non-congruent regions.
inline GridOverlay overlay_grid_and_classify(const Family& fam, const std::vector<int>& dep_ids,
                                             const Rational& side) {
    GridOverlay g;
    g.side = side;
    std::int64_t den = side.den();
    for (int id : dep_ids) {
        const Rect& r = fam[id].original;
        if (!(r.x_hi - r.x_lo == side) || !(r.y_hi - r.y_lo == side))
            throw std::invalid_argument("regions are not congruent squares of the given side");
        den = detail::lcm64(den, r.x_lo.den());
        den = detail::lcm64(den, r.y_lo.den());
    }
    // with every corner coordinate and the side a multiple of 1/den, lines at
    // offset 1/(2 den) can never meet a corner
    g.off = Rational(1, 2 * den);

    std::vector<Point> bls;
    bls.reserve(dep_ids.size());
    for (int id : dep_ids) bls.push_back(fam[id].shape.bl());
    g.ipf1 = Staircase::of_points(std::move(bls));
    for (std::size_t k = 0; k + 1 < g.ipf1.size(); ++k) {
        if (g.ipf1[k].x < g.ipf1[k + 1].x && g.ipf1[k].y > g.ipf1[k + 1].y)
            g.concave.push_back(Point{g.ipf1[k].x, g.ipf1[k + 1].y});
    }

    for (int id : dep_ids) {
        CellKey key = g.cell_of(fam[id].shape.tr());
        g.cells[key]; // create
    }
    for (auto& [key, cell] : g.cells) {
        const auto [i, j] = key;
        const Rational x0 = g.line(i), x1 = g.line(i + 1);
        const Rational y0 = g.line(j), y1 = g.line(j + 1);
        auto add_if_on = [&](std::optional<Point> p, bool horizontal) {
            if (!p) return;
            if (horizontal ? (x0 < p->x && p->x < x1) : (y0 < p->y && p->y < y1))
                cell.crossings.push_back(*p);
        };
        add_if_on(detail::polyline_cross_horizontal(g.ipf1, y1), true);
        add_if_on(detail::polyline_cross_horizontal(g.ipf1, y0), true);
        add_if_on(detail::polyline_cross_vertical(g.ipf1, x0), false);
        add_if_on(detail::polyline_cross_vertical(g.ipf1, x1), false);
    }
    for (int id : dep_ids) {
        CellKey key = g.cell_of(fam[id].shape.tr());
        GridOverlay::Cell& cell = g.cells[key];
        if (cell.crossings.empty()) {
            cell.a_ids.push_back(id);
            continue;
        }
        bool touches = false;
        for (const Point& p : cell.crossings)
            if (fam[id].shape.contains(p)) touches = true;
        (touches ? cell.b_ids : cell.c_ids).push_back(id);
    }
    for (auto& [key, cell] : g.cells) {
        g.band_by_diag.push_back(key);
        g.band_by_antidiag.push_back(key);
    }
    std::sort(g.band_by_diag.begin(), g.band_by_diag.end(),
              [](const CellKey& a, const CellKey& b) {
                  if (a.second - a.first != b.second - b.first)
                      return a.second - a.first > b.second - b.first;
                  return a.second > b.second;
              });
    std::sort(g.band_by_antidiag.begin(), g.band_by_antidiag.end(),
              [](const CellKey& a, const CellKey& b) {
                  if (a.first + a.second != b.first + b.second)
                      return a.first + a.second > b.first + b.second;
                  return a.first < b.first;
              });
    return g;
}

namespace detail {

struct SweepItem {
    bool is_point;
    int id;
    Point pt;  // for points
    Rect rect; // for squares

    Rational key_y() const { return is_point ? pt.y : rect.y_hi; }
    Rational key_x() const { return is_point ? pt.x : rect.x_hi; }
};

// Total order realizing the sweep: decreasing y, squares before points,
// then increasing x, residual ties by id.
inline bool sweep_less(const SweepItem& a, const SweepItem& b) {
    tick();
    if (a.key_y() != b.key_y()) return a.key_y() > b.key_y();
    if (a.is_point != b.is_point) return !a.is_point;
    if (a.key_x() != b.key_x()) return a.key_x() < b.key_x();
    return a.id < b.id;
}

// Weak maxima of the retrieved points, queryable from both axes.
class Skyline {
public:
    void add(const Point& p) {
        auto it = by_x_.lower_bound(p.x);
        tick(2);
        if (it != by_x_.end() && it->second >= p.y) return; // weakly covered
        if (it != by_x_.end() && it->first == p.x) {
            by_y_.erase(it->second);
            it = by_x_.erase(it);
        }
        while (it != by_x_.begin()) {
            auto prev = std::prev(it);
            tick();
            if (prev->second <= p.y) {
                by_y_.erase(prev->second);
                it = by_x_.erase(prev);
            } else {
                break;
            }
        }
        by_x_.emplace_hint(it, p.x, p.y);
        by_y_.emplace(p.y, p.x);
    }
    // member of maximum x among those with y >= q (x ties resolved upward by
    // maxima-ness: exactly one member per x)
    std::optional<Point> rightmost_with_y_ge(const Rational& q) const {
        auto it = by_y_.lower_bound(q);
        tick(2);
        if (it == by_y_.end()) return std::nullopt;
        return Point{it->second, it->first};
    }
    std::optional<Point> topmost_with_x_ge(const Rational& q) const {
        auto it = by_x_.lower_bound(q);
        tick(2);
        if (it == by_x_.end()) return std::nullopt;
        return Point{it->first, it->second};
    }

private:
    std::map<Rational, Rational> by_x_; // x -> y, y strictly decreasing
    std::map<Rational, Rational> by_y_; // y -> x, x strictly decreasing
};

// Applies the generic sweep to one item set: non-dominated squares are
// retrieved (their points re-enter the order), non-dominated points extend
// the output front.
template <typename OnRetrieve>
inline void generic_sweep(std::vector<SweepItem> items, Family& fam, RetrievalOracle& oracle,
                          std::vector<std::pair<int, Point>>& out, OnRetrieve&& on_retrieve) {
    std::sort(items.begin(), items.end(), sweep_less);
    std::optional<Point> front; // last front point
    auto dominated_pt = [&](const Point& p) { return front && dominates(*front, p); };
    auto dominated_sq = [&](const Rect& r) { return front && point_dominates_rect(*front, r); };
    for (std::size_t cursor = 0; cursor < items.size(); ++cursor) {
        SweepItem it = items[cursor];
        if (it.is_point) {
            if (dominated_pt(it.pt)) continue;
            front = it.pt;
            out.emplace_back(it.id, it.pt);
        } else {
            if (dominated_sq(it.rect)) continue;
            Point p = oracle.retrieve(fam, it.id);
            on_retrieve(it.id, p);
            SweepItem np{true, it.id, p, Rect{}};
            auto pos = std::upper_bound(items.begin() + long(cursor) + 1, items.end(), np,
                                        sweep_less);
            items.insert(pos, np);
        }
    }
}

} // namespace detail

// Cell-based sweep over the type A and B regions: processes the non-empty
// cells from top-right to bottom-left, seeding each cell's sweep with the
// dominating points propagated from above and from the right, and stitches
// the per-cell front fragments together.
inline std::vector<std::pair<int, Point>> cell_sweep(const GridOverlay& g, Family& fam,
                                                     RetrievalOracle& oracle,
                                                     std::vector<std::pair<int, int>>& log,
                                                     WorkCounters& counters,
                                                     const RunOptions& opts) {
    CountScope scope(counters.cell_sweep_comparisons);
    std::map<CellKey, std::vector<std::pair<int, Point>>> retrieved_of_cell;
    std::map<CellKey, std::vector<std::pair<int, Point>>> fragment_of_cell;
    detail::Skyline sky; // maxima of all points retrieved so far

    auto ab_of = [&](CellKey k) -> std::vector<int> {
        auto it = g.cells.find(k);
        if (it == g.cells.end()) return {};
        std::vector<int> v = it->second.a_ids;
        v.insert(v.end(), it->second.b_ids.begin(), it->second.b_ids.end());
        return v;
    };

    std::vector<CellKey> processed;
    for (auto& [key, cell] : g.cells) {
        if (cell.a_ids.empty() && cell.b_ids.empty()) continue;
        const auto [i, j] = key;
        processed.push_back({i, j});
        processed.push_back({i - 1, j});
        processed.push_back({i, j - 1});
        processed.push_back({i - 1, j - 1});
    }
    std::sort(processed.begin(), processed.end(), [](const CellKey& a, const CellKey& b) {
        if (a.first + a.second != b.first + b.second)
            return a.first + a.second > b.first + b.second;
        return a.first < b.first;
    });
    processed.erase(std::unique(processed.begin(), processed.end()), processed.end());

    for (const CellKey& key : processed) {
        const auto [i, j] = key;
        std::vector<detail::SweepItem> items;
        std::int64_t t = 0;
        for (int id : ab_of(key)) {
            items.push_back({false, id, Point{}, fam[id].shape});
            ++t;
        }
        for (CellKey nk : {CellKey{i + 1, j}, CellKey{i, j + 1}, CellKey{i + 1, j + 1}}) {
            t += std::int64_t(ab_of(nk).size());
            auto it = retrieved_of_cell.find(nk);
            if (it == retrieved_of_cell.end()) continue;
            for (auto& [id, p] : it->second) items.push_back({true, id, p, Rect{}});
        }
        counters.per_cell_t[key] += t;
        // p_l: rightmost retrieved point with x >= line(i), y >= line(j+1);
        // p_r: topmost with x >= line(i+1), y >= line(j). The skyline's
        // rightmost member at or above a height is the rightmost point
        // overall, so one query per seed suffices.
        std::optional<Point> pl = sky.rightmost_with_y_ge(g.line(j + 1));
        if (pl && !(pl->x >= g.line(i))) pl.reset();
        std::optional<Point> pr = sky.topmost_with_x_ge(g.line(i + 1));
        if (pr && !(pr->y >= g.line(j))) pr.reset();
        if (pl) items.push_back({true, -1, *pl, Rect{}});
        if (pr) items.push_back({true, -2, *pr, Rect{}});

        std::vector<std::pair<int, Point>> swept;
        detail::generic_sweep(std::move(items), fam, oracle, swept, [&](int id, const Point& p) {
            log.emplace_back(id, 1);
            CellKey home = g.cell_of(fam[id].original.tr());
            retrieved_of_cell[home].emplace_back(id, p);
            sky.add(p);
        });
        for (auto& [id, p] : swept) {
            if (id < 0) continue; // seed points live outside the cell anyway
            if (g.cell_of(p) == key) fragment_of_cell[key].emplace_back(id, p);
        }
    }

    // stitch fragments from top-left to bottom-right
    std::vector<CellKey> frag_keys;
    frag_keys.reserve(fragment_of_cell.size());
    for (auto& [key, frag] : fragment_of_cell) frag_keys.push_back(key);
    std::sort(frag_keys.begin(), frag_keys.end(), [](const CellKey& a, const CellKey& b) {
        if (a.second - a.first != b.second - b.first) return a.second - a.first > b.second - b.first;
        return a.second > b.second;
    });
    std::vector<std::pair<int, Point>> pf_ab;
    for (const CellKey& key : frag_keys)
        for (auto& e : fragment_of_cell[key]) pf_ab.push_back(e);
    if (opts.strict_checks) {
        auto direct = pareto_front(pf_ab).members;
        detail::check_or_throw(direct == pf_ab, "cell fragments do not stitch into a front");
    }
    return pf_ab;
}

// A freshly retrieved point is fiddly when it is a concave corner of the
// dependent family's inner front and lies on its own region's top facet;
// such points are processed inline instead of being finger-inserted.
inline bool is_fiddly(const GridOverlay& g, const Point& p, const Rect& region) {
    if (!(p.y == region.y_hi)) return false;
    std::size_t lo = 0, hi = g.concave.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        tick();
        if (g.concave[mid].x < p.x)
            lo = mid + 1;
        else
            hi = mid;
    }
    for (; lo < g.concave.size() && g.concave[lo].x == p.x; ++lo)
        if (g.concave[lo].y == p.y) return true;
    return false;
}

// Merges the A/B front with the type C regions through a finger search tree;
// every non-fiddly retrieved point is inserted starting from its own region's
// node, so the search pays only for the rank distance it actually moves.
inline std::vector<std::pair<int, Point>> finger_sweep(const GridOverlay& g, Family& fam,
                                                       RetrievalOracle& oracle,
                                                       const std::vector<std::pair<int, Point>>& pf_ab,
                                                       std::uint64_t seed,
                                                       std::vector<std::pair<int, int>>& log,
                                                       WorkCounters& counters,
                                                       const RunOptions& opts = {}) {
    CountScope scope(counters.finger_sweep_comparisons);
    using List = FingerList<detail::SweepItem, bool (*)(const detail::SweepItem&,
                                                        const detail::SweepItem&)>;
    List tree(&detail::sweep_less, seed);
    {
        std::vector<detail::SweepItem> sq;
        for (auto& [key, cell] : g.cells)
            for (int id : cell.c_ids) sq.push_back({false, id, Point{}, fam[id].shape});
        std::sort(sq.begin(), sq.end(), detail::sweep_less);
        for (auto& s : sq) tree.append(s);
    }
    std::vector<std::pair<List::Node*, List::Node*>> finger_pairs;

    std::vector<std::pair<int, Point>> out;
    std::optional<Point> front;
    auto take_point = [&](int id, const Point& p) {
        if (front && dominates(*front, p)) return;
        front = p;
        out.emplace_back(id, p);
    };

    std::size_t si = 0;
    List::Node* node = tree.first();
    while (si < pf_ab.size() || node) {
        bool from_tree;
        if (si == pf_ab.size())
            from_tree = true;
        else if (!node)
            from_tree = false;
        else {
            detail::SweepItem sp{true, pf_ab[si].first, pf_ab[si].second, Rect{}};
            from_tree = detail::sweep_less(node->value, sp);
        }
        if (!from_tree) {
            take_point(pf_ab[si].first, pf_ab[si].second);
            ++si;
            continue;
        }
        detail::SweepItem& item = node->value;
        if (item.is_point) {
            take_point(item.id, item.pt);
        } else if (!(front && point_dominates_rect(*front, item.rect))) {
            Point p = oracle.retrieve(fam, item.id);
            log.emplace_back(item.id, 1);
            if (is_fiddly(g, p, item.rect)) {
                if (opts.strict_checks) {
                    // the fiddly point follows its region immediately among
                    // the items that are not strictly inside the inner front
                    detail::SweepItem pi{true, item.id, p, Rect{}};
                    for (List::Node* w = List::succ(node);
                         w && detail::sweep_less(w->value, pi); w = List::succ(w)) {
                        const detail::SweepItem& v = w->value;
                        Point rep = v.is_point ? v.pt : v.rect.tr();
                        detail::check_or_throw(g.ipf1.strictly_dominates(rep),
                                           "item between a region and its fiddly point");
                    }
                }
                ++counters.fiddly_points;
                take_point(item.id, p);
            } else {
                List::Node* in = tree.insert_with_finger(node, {true, item.id, p, Rect{}});
                finger_pairs.emplace_back(node, in);
            }
        }
        node = List::succ(node);
    }

    // rank accounting over the final tree content
    std::map<const List::Node*, std::size_t> rank;
    std::size_t idx = 0;
    for (List::Node* n = tree.first(); n; n = List::succ(n)) rank[n] = idx++;
    counters.finger_tree_size = tree.size();
    counters.finger_insertions = finger_pairs.size();
    for (auto& [rn, pn] : finger_pairs) {
        double d = double(rank[pn] - rank[rn]);
        counters.finger_log_sum += std::log2(d >= 1.0 ? d : 1.0);
    }
    return out;
}

// Full reconstruction program for congruent squares: grid classification,
// cell sweep, finger sweep, then the merge with the independent regions.
inline StrategyResult reconstruct_unit_squares(const Preprocessed& pre, RetrievalOracle& oracle,
                                               const Rational& side, const RunOptions& opts = {}) {
    if (!(Rational(0) < side)) throw std::invalid_argument("square side must be positive");
    StrategyResult res;
    CountScope scope(res.counters.comparisons);
    res.final_family = pre.family;
    Family& fam = res.final_family;
    const std::vector<int>& dep = pre.report.dependent;
    const std::vector<int>& ind = pre.report.independent;
    for (int id : ind) {
        const Rect& r = fam[id].original;
        if (!(r.x_hi - r.x_lo == side) || !(r.y_hi - r.y_lo == side))
            throw std::invalid_argument("regions are not congruent squares of the given side");
    }

    GridOverlay g = overlay_grid_and_classify(fam, dep, side);
    std::uint64_t seed = 0x5eedULL;
    for (int id : dep) seed = seed * 1099511628211ULL + std::uint64_t(id + 1);

    auto pf_ab = cell_sweep(g, fam, oracle, res.log, res.counters, opts);
    auto pf_p1 = finger_sweep(g, fam, oracle, pf_ab, seed, res.log, res.counters, opts);

    // stage 2: resolve the independent regions against the stage-1 staircase
    std::vector<Point> pts;
    pts.reserve(pf_p1.size());
    for (auto& [id, p] : pf_p1) pts.push_back(p);
    Staircase phi = Staircase::of_points(std::move(pts));
    Staircase certain = detail::certain_domination_front(pre.ipf0, phi);
    Staircase live = detail::live_vertices(phi, certain);
    for (int id : ind) {
        if (fam[id].retrieved) continue;
        if (detail::stage2_must_retrieve(certain, live, fam[id].shape)) {
            oracle.retrieve(fam, id);
            res.log.emplace_back(id, 2);
        }
    }
    res.front = detail::build_final_front(fam, dep, ind);
    res.counters.retrievals = res.log.size();
    res.counters.comparisons +=
        res.counters.cell_sweep_comparisons + res.counters.finger_sweep_comparisons;
    return res;
}

} // namespace parfront
