#pragma once

#include "parfront/instance.hpp"

#include <vector>

namespace parfront::testing {

inline Point pt(std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; }

inline std::vector<Rect> random_regions(Rng& rng, int n, std::int64_t span, std::int64_t maxw) {
    std::vector<Rect> v;
    for (int i = 0; i < n; ++i) {
        std::int64_t x = rng.range(0, span), y = rng.range(0, span);
        std::int64_t w = rng.range(0, maxw), h = rng.range(0, maxw);
        v.push_back(Rect{Rational(x), Rational(y), Rational(x + w), Rational(y + h)});
    }
    return v;
}

// congruent squares with corners on even coordinates
inline std::vector<Rect> random_squares(Rng& rng, int n, std::int64_t span, std::int64_t side) {
    std::vector<Rect> v;
    for (int i = 0; i < n; ++i) {
        std::int64_t x = rng.range(0, span), y = rng.range(0, span);
        v.push_back(Rect{Rational(x), Rational(y), Rational(x + side), Rational(y + side)});
    }
    return v;
}

inline std::vector<Point> random_realization(Rng& rng, const Family& f, bool halves = true) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rect& r = f[i].original;
        std::int64_t den = halves ? 2 : 1;
        Rational x = r.x_lo + Rational(rng.range(0, den * (r.x_hi - r.x_lo).num()), den);
        Rational y = r.y_lo + Rational(rng.range(0, den * (r.y_hi - r.y_lo).num()), den);
        pts.push_back(Point{x, y});
    }
    return pts;
}

inline std::vector<Point> corner_realization(const Family& f, bool tr) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < f.size(); ++i)
        pts.push_back(tr ? f[i].original.tr() : f[i].original.bl());
    return pts;
}

} // namespace parfront::testing
