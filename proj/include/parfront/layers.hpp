#pragma once

#include "parfront/family.hpp"
#include "parfront/util.hpp"

#include <algorithm>
#include <vector>

namespace parfront {

// Iterated outer-front peeling of the dependent regions, oracle version:
// repeatedly remove the regions whose top-right corners are maximal.
inline std::vector<std::vector<int>> peel_layers(const Family& f, std::vector<int> ids) {
    std::vector<std::vector<int>> layers;
    while (!ids.empty()) {
        std::vector<Point> trs;
        trs.reserve(ids.size());
        for (int id : ids) trs.push_back(f[id].shape.tr());
        Staircase st = Staircase::of_points(trs);
        std::vector<int> layer, rest;
        for (int id : ids)
            (st.strictly_dominates(f[id].shape.tr()) ? rest : layer).push_back(id);
        layers.push_back(std::move(layer));
        ids = std::move(rest);
    }
    return layers;
}

// Layer index per region in one sweep: the layer of a corner is one more than
// the deepest layer among corners strictly dominating it.
inline std::vector<int> layer_assignment_fast(const Family& f, const std::vector<int>& ids) {
    std::vector<int> order(ids);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        tick();
        return f[a].shape.tr().x > f[b].shape.tr().x;
    });
    std::vector<Rational> ys;
    ys.reserve(ids.size());
    for (int id : ids) ys.push_back(f[id].shape.tr().y);
    RankTable ranks(std::move(ys));
    // suffix max over y: store at reversed rank
    FenwickMax fen(ranks.size());
    auto rev = [&](std::size_t r) { return ranks.size() - 1 - r; };
    std::vector<int> layer_of(f.size(), -1);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        const Rational x = f[order[i]].shape.tr().x;
        while (j < order.size() && f[order[j]].shape.tr().x == x) ++j;
        for (std::size_t k = i; k < j; ++k) {
            const Point tr = f[order[k]].shape.tr();
            // deepest layer among processed corners with y > tr.y
            int deepest = fen.prefix_max(ranks.rank_gt(tr.y) == ranks.size()
                                             ? 0
                                             : rev(ranks.rank_gt(tr.y)) + 1);
            layer_of[order[k]] = std::max(deepest, 0) + 1;
        }
        for (std::size_t k = i; k < j; ++k) {
            const Point tr = f[order[k]].shape.tr();
            fen.update(rev(ranks.rank_exact(tr.y)), layer_of[order[k]]);
        }
        i = j;
    }
    return layer_of;
}

struct LayerEntry {
    Point tr;
    int id;
};

// Static layer decomposition of the dependent regions with per-layer corner
// staircases, plus the point-to-layer locator (binary search over the nested
// staircases).
class LayerDecomposition {
public:
    LayerDecomposition() = default;

    static LayerDecomposition build(const Family& f, const std::vector<int>& ids) {
        LayerDecomposition ld;
        if (ids.empty()) return ld;
        std::vector<int> layer_of = layer_assignment_fast(f, ids);
        int k = 0;
        for (int id : ids) k = std::max(k, layer_of[id]);
        ld.layers_.resize(k);
        for (int id : ids) ld.layers_[layer_of[id] - 1].push_back(LayerEntry{f[id].shape.tr(), id});
        for (auto& layer : ld.layers_) {
            std::sort(layer.begin(), layer.end(), [](const LayerEntry& a, const LayerEntry& b) {
                tick();
                if (a.tr.x != b.tr.x) return a.tr.x < b.tr.x;
                if (a.tr.y != b.tr.y) return a.tr.y > b.tr.y;
                return a.id < b.id;
            });
        }
        return ld;
    }

    std::size_t layer_count() const { return layers_.size(); }
    const std::vector<LayerEntry>& layer(std::size_t i) const { return layers_[i]; }

    // Index of the first corner of layer li with x >= q.
    std::size_t first_x_ge(std::size_t li, const Rational& q) const {
        const auto& layer = layers_[li];
        std::size_t lo = 0, hi = layer.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (layer[mid].tr.x < q)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    // Whether the open lower-left quadrant of q reaches the layer's polyline,
    // i.e. q pokes above that staircase.
    bool quadrant_meets_layer(std::size_t li, const Point& q) const {
        const auto& layer = layers_[li];
        if (layer.empty()) return false;
        std::size_t k = first_x_ge(li, q.x);
        if (k == layer.size()) return true;
        tick();
        return layer[k].tr.y < q.y;
    }

    // Corners of layer li strictly dominated by q, as index range [lo, hi).
    std::pair<std::size_t, std::size_t> dominated_corner_range(std::size_t li,
                                                               const Point& q) const {
        const auto& layer = layers_[li];
        std::size_t k = first_x_ge(li, q.x);
        std::size_t lo = 0, hi = k;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            tick();
            if (layer[mid].tr.y >= q.y)
                lo = mid + 1;
            else
                hi = mid;
        }
        return {lo, k};
    }

    // Deepest staircases are nested below shallower ones, so the first layer
    // whose polyline the quadrant of q reaches is found by binary search.
    // Only layers strictly deeper than `after` are considered (pass -1 for
    // all layers); returns layer_count() when q reaches none.
    std::size_t locate_first_reached(const Point& q, std::ptrdiff_t after = -1) const {
        // the predicate is monotone: once reached, all deeper layers are reached
        std::size_t lo = std::size_t(after + 1), hi = layers_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (quadrant_meets_layer(mid, q))
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

private:
    std::vector<std::vector<LayerEntry>> layers_;
};

} // namespace parfront
