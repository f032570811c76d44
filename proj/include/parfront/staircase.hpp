#pragma once

#include "parfront/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace parfront {

// Maximal points of a planar set, sorted by increasing x and non-increasing y
// (duplicates collapsed). The implied polyline is the boundary of the region
// weakly covered by the points: a horizontal run ending at each point plus a
// vertical drop below it, with infinite tails at both ends.
class Staircase {
public:
    Staircase() = default;
    explicit Staircase(std::vector<Point> maxima_sorted) : pts_(std::move(maxima_sorted)) {}

    // Builds the staircase of the maxima (under strict dominance) of an
    // arbitrary point set. Coincident maxima collapse to one staircase point.
    static Staircase of_points(std::vector<Point> pts) {
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            if (a.x != b.x) return a.x > b.x;
            return a.y > b.y;
        });
        std::vector<Point> out;
        std::size_t i = 0;
        std::optional<Rational> best; // max y among strictly larger x
        while (i < pts.size()) {
            std::size_t j = i;
            while (j < pts.size() && pts[j].x == pts[i].x) ++j;
            for (std::size_t k = j; k-- > i;) { // ascending y, so reverse gives y-desc
                if (!best || pts[k].y >= *best) {
                    if (out.empty() || out.back() != pts[k]) out.push_back(pts[k]);
                }
            }
            Rational grp = pts[i].y; // max y in the x-group
            if (!best || grp > *best) best = grp;
            i = j;
        }
        std::reverse(out.begin(), out.end());
        return Staircase(std::move(out));
    }

    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    // Index of the first point with x >= q (size() if none).
    std::size_t first_x_ge(const Rational& q) const {
        std::size_t lo = 0, hi = pts_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].x < q)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
    // Index of the first point with x > q.
    std::size_t first_x_gt(const Rational& q) const {
        std::size_t lo = 0, hi = pts_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].x <= q)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
    // Index of the first point with y < q (y is non-increasing, so points
    // [0, idx) have y >= q).
    std::size_t first_y_lt(const Rational& q) const {
        std::size_t lo = 0, hi = pts_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].y >= q)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
    std::size_t first_y_le(const Rational& q) const {
        std::size_t lo = 0, hi = pts_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].y > q)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    // Some staircase point strictly dominates p.
    bool strictly_dominates(const Point& p) const {
        std::size_t i = first_x_gt(p.x);
        tick();
        return i < pts_.size() && pts_[i].y > p.y;
    }
    // p is weakly covered by some staircase point (p is on or below the polyline).
    bool covered(const Point& p) const {
        std::size_t i = first_x_ge(p.x);
        tick();
        return i < pts_.size() && pts_[i].y >= p.y;
    }
    // p is dominated by no staircase point.
    bool above_or_on(const Point& p) const { return !strictly_dominates(p); }
    // p lies exactly on the polyline.
    bool on_boundary(const Point& p) const { return covered(p) && !strictly_dominates(p); }

    // Maximal contiguous index range [lo, hi) of staircase points strictly
    // dominated by p; empty range (lo == hi) if none.
    std::pair<std::size_t, std::size_t> dominated_range(const Point& p) const {
        std::size_t k = first_x_ge(p.x); // points [0, k) have x < p.x
        // among [0, k), y < p.y holds for a suffix
        std::size_t lo = 0, hi = k;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].y >= p.y)
                lo = mid + 1;
            else
                hi = mid;
        }
        return {lo, k};
    }

    // Whether the open lower-left quadrant of q meets the polyline at all.
    // Equivalently: the polyline level just left of q.x lies strictly below q.y.
    bool quadrant_meets_polyline(const Point& q) const {
        if (pts_.empty()) return false;
        std::size_t k = first_x_ge(q.x);
        if (k == pts_.size()) return true; // down-tail left of q.x
        tick();
        return pts_[k].y < q.y;
    }

    // Whether the interior, the closed top facet, or the closed right facet of
    // r meets the polyline. Touches along the bottom or left facet alone do
    // not count, except through a staircase vertex lying on the top or right
    // facet (where point coincidence is possible).
    bool intersects_interior_top_right(const Rect& r) const {
        if (pts_.empty()) return false;
        if (interior_hit(r)) return true;
        // top facet: positive-length overlap with the run at height y_hi,
        // or a vertex on the closed top facet
        if (horizontal_overlap_positive(r.y_hi, r.x_lo, r.x_hi)) return true;
        if (vertex_in_xrange_at_y(r.y_hi, r.x_lo, r.x_hi)) return true;
        // right facet
        if (vertical_overlap_positive(r.x_hi, r.y_lo, r.y_hi)) return true;
        if (vertex_in_yrange_at_x(r.x_hi, r.y_lo, r.y_hi)) return true;
        return false;
    }

    // Some staircase point lies in the closed rectangle.
    bool has_vertex_in_rect(const Rect& r) const {
        std::size_t a = first_x_ge(r.x_lo);
        std::size_t b = first_x_gt(r.x_hi);
        // y is non-increasing over the window: the first point at or below
        // the top edge is the only candidate
        std::size_t lo = a, hi = b;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].y > r.y_hi)
                lo = mid + 1;
            else
                hi = mid;
        }
        tick();
        return lo < b && pts_[lo].y >= r.y_lo;
    }

    // First obstacle rectangle hit by the axis-aligned ray from p, over a
    // sequence of rectangles. Returns index into obstacles, or nullopt.
    // direction: true = up, false = right. Obstacles need not be sorted; this
    // is the oracle-grade linear version.
    static std::optional<std::size_t> ray_hit(const Point& p, bool up,
                                              const std::vector<Rect>& obstacles) {
        std::optional<std::size_t> best;
        std::optional<Rational> best_entry;
        for (std::size_t i = 0; i < obstacles.size(); ++i) {
            const Rect& r = obstacles[i];
            if (up) {
                if (!(r.x_lo <= p.x && p.x <= r.x_hi)) continue;
                tick(2);
                if (!(r.y_hi > p.y)) continue;
                tick();
                Rational entry = max(r.y_lo, p.y);
                if (!best || entry < *best_entry) {
                    best = i;
                    best_entry = entry;
                }
            } else {
                if (!(r.y_lo <= p.y && p.y <= r.y_hi)) continue;
                tick(2);
                if (!(r.x_hi > p.x)) continue;
                tick();
                Rational entry = max(r.x_lo, p.x);
                if (!best || entry < *best_entry) {
                    best = i;
                    best_entry = entry;
                }
            }
        }
        return best;
    }

private:
    // Polyline meets the open rectangle.
    bool interior_hit(const Rect& r) const {
        if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi)) return false;
        std::size_t f = first_x_gt(r.x_lo);
        if (f == pts_.size()) return false; // no polyline strictly right of x_lo
        const Rational top = pts_[f].y;     // highest level inside the open strip
        std::size_t g = first_x_ge(r.x_hi);
        // lowest level attained inside the strip; the down-tail makes it -inf
        tick(2);
        if (!(top > r.y_lo)) return false;
        if (g == pts_.size()) return true;
        tick();
        return pts_[g].y < r.y_hi;
    }

    // The run segment(s) at height y overlap [x1, x2] with positive length.
    bool horizontal_overlap_positive(const Rational& y, const Rational& x1,
                                     const Rational& x2) const {
        // points on the polyline at height y form the closed x-interval
        // [Xs, Xc]: Xc = max{p.x : p.y >= y}, Xs = max{p.x : p.y > y} (-inf -> x1)
        std::size_t c = first_y_lt(y);
        if (c == 0) return false; // nothing reaches height y
        const Rational xc = pts_[c - 1].x;
        std::size_t s = first_y_le(y);
        Rational lo = x1;
        if (s > 0) lo = max(x1, pts_[s - 1].x);
        Rational hi = min(x2, xc);
        tick();
        return lo < hi;
    }

    bool vertical_overlap_positive(const Rational& x, const Rational& y1,
                                   const Rational& y2) const {
        // polyline points at abscissa x form the closed y-interval [Ys, Yc]:
        // Yc = max{p.y : p.x >= x}, Ys = max{p.y : p.x > x} (-inf -> y1)
        std::size_t c = first_x_ge(x);
        if (c == pts_.size()) return false;
        const Rational yc = pts_[c].y;
        std::size_t s = first_x_gt(x);
        Rational lo = y1;
        if (s < pts_.size()) lo = max(y1, pts_[s].y);
        Rational hi = min(y2, yc);
        tick();
        return lo < hi;
    }

    bool vertex_in_xrange_at_y(const Rational& y, const Rational& x1,
                               const Rational& x2) const {
        // vertices with this exact y are contiguous with ascending x
        std::size_t a = first_y_le(y);
        std::size_t b = first_y_lt(y);
        std::size_t lo = a, hi = b;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].x < x1)
                lo = mid + 1;
            else
                hi = mid;
        }
        tick();
        return lo < b && pts_[lo].x <= x2;
    }

    bool vertex_in_yrange_at_x(const Rational& x, const Rational& y1,
                               const Rational& y2) const {
        // vertices with this exact x are contiguous with descending y
        std::size_t a = first_x_ge(x);
        std::size_t b = first_x_gt(x);
        std::size_t lo = a, hi = b;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (pts_[mid].y > y2)
                lo = mid + 1;
            else
                hi = mid;
        }
        tick();
        return lo < b && pts_[lo].y >= y1;
    }

    std::vector<Point> pts_;
};

} // namespace parfront
