#pragma once

#include "parfront/counters.hpp"
#include "parfront/rational.hpp"

namespace parfront {

struct Point {
    Rational x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Strict dominance: p lies in the open top-right quadrant of q.
inline bool dominates(const Point& p, const Point& q) {
    tick(2);
    return p.x > q.x && p.y > q.y;
}

// Weak coordinate-wise order, p >= q in both coordinates.
inline bool covers(const Point& p, const Point& q) {
    tick(2);
    return p.x >= q.x && p.y >= q.y;
}

inline Point coord_min(const Point& a, const Point& b) {
    return Point{min(a.x, b.x), min(a.y, b.y)};
}
inline Point coord_max(const Point& a, const Point& b) {
    return Point{max(a.x, b.x), max(a.y, b.y)};
}

// Closed axis-aligned rectangle; degenerate (point) rectangles are legal and
// are what retrieval leaves behind.
struct Rect {
    Rational x_lo, y_lo, x_hi, y_hi;

    static Rect of_point(const Point& p) { return Rect{p.x, p.y, p.x, p.y}; }

    bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
    bool is_point() const { return x_lo == x_hi && y_lo == y_hi; }
    Point bl() const { return Point{x_lo, y_lo}; }
    Point tr() const { return Point{x_hi, y_hi}; }
    bool contains(const Point& p) const {
        return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
    }
    bool strictly_contains(const Point& p) const {
        return x_lo < p.x && p.x < x_hi && y_lo < p.y && p.y < y_hi;
    }
    friend bool operator==(const Rect& a, const Rect& b) {
        return a.x_lo == b.x_lo && a.y_lo == b.y_lo && a.x_hi == b.x_hi && a.y_hi == b.y_hi;
    }
};

// p dominates the whole rectangle: r is contained in the open bottom-left
// quadrant of p.
inline bool point_dominates_rect(const Point& p, const Rect& r) {
    tick(2);
    return p.x > r.x_hi && p.y > r.y_hi;
}

} // namespace parfront
