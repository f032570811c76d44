#pragma once

#include "parfront/staircase.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parfront {

// Ordered collection of regions; entry index is the region id. Retrieval
// replaces the shape by a degenerate rectangle in place, so every rectangle
// predicate keeps applying. The original shapes never change.
class Family {
public:
    struct Entry {
        Rect original;
        Rect shape;
        bool retrieved = false;
    };

    Family() = default;
    explicit Family(const std::vector<Rect>& regions) {
        entries_.reserve(regions.size());
        for (const Rect& r : regions) {
            if (!r.valid()) throw std::invalid_argument("invalid region rectangle");
            entries_.push_back(Entry{r, r, false});
        }
    }

    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t id) const { return entries_[id]; }
    const std::vector<Entry>& entries() const { return entries_; }

    void apply_retrieval(std::size_t id, const Point& p) {
        Entry& e = entries_.at(id);
        if (e.retrieved) throw std::logic_error("region retrieved twice");
        if (!e.original.contains(p)) throw std::logic_error("point outside its region");
        e.shape = Rect::of_point(p);
        e.retrieved = true;
    }

    // Staircase of the current bottom-left corners; its strictly dominated
    // area is exactly the set of points dominated under every realization.
    Staircase inner_front_staircase() const {
        std::vector<Point> bl;
        bl.reserve(entries_.size());
        for (const Entry& e : entries_) bl.push_back(e.shape.bl());
        return Staircase::of_points(std::move(bl));
    }

    Staircase inner_front_staircase(const std::vector<int>& ids) const {
        std::vector<Point> bl;
        bl.reserve(ids.size());
        for (int id : ids) bl.push_back(entries_[id].shape.bl());
        return Staircase::of_points(std::move(bl));
    }

private:
    std::vector<Entry> entries_;
};

inline bool is_strictly_inside_inner_front(const Staircase& ipf, const Point& p) {
    return ipf.strictly_dominates(p);
}

// Hides the realization; algorithms see points only through retrieve().
class RetrievalOracle {
public:
    RetrievalOracle(const Family& f, std::vector<Point> realization)
        : hidden_(std::move(realization)), done_(hidden_.size(), false) {
        if (hidden_.size() != f.size())
            throw std::invalid_argument("realization size mismatch");
        for (std::size_t i = 0; i < hidden_.size(); ++i)
            if (!f[i].original.contains(hidden_[i]))
                throw std::invalid_argument("realization point outside region");
    }

    Point retrieve(Family& f, std::size_t id) {
        if (id >= hidden_.size()) throw std::logic_error("unknown region id");
        if (done_[id]) throw std::logic_error("double retrieval");
        done_[id] = true;
        log_.push_back(int(id));
        f.apply_retrieval(id, hidden_[id]);
        return hidden_[id];
    }

    bool retrieved(std::size_t id) const { return done_[id]; }
    int count() const { return int(log_.size()); }
    const std::vector<int>& log() const { return log_; }

private:
    std::vector<Point> hidden_;
    std::vector<char> done_;
    std::vector<int> log_;
};

// A member of a reconstructed front: either a retrieved point or a region
// that is on the front under every realization.
struct FrontMember {
    int id;
    Rect shape; // degenerate for points
};

// Ordered front plus the induced partial order. For a finished family the
// relation between two members is constant; it reduces to a corner formula.
struct FrontResult {
    std::vector<FrontMember> members; // staircase order, ties by id

    // a strictly precedes b along the staircase under every realization.
    static bool precedes(const Rect& a, const Rect& b) {
        return a.x_hi < b.x_lo || a.y_lo > b.y_hi;
    }

    std::vector<int> ids() const {
        std::vector<int> v;
        v.reserve(members.size());
        for (const auto& m : members) v.push_back(m.id);
        std::sort(v.begin(), v.end());
        return v;
    }

    // Explicit relation pairs; quadratic, intended for desk-scale checks.
    std::vector<std::pair<int, int>> relation_pairs() const {
        std::vector<std::pair<int, int>> rel;
        for (const auto& a : members)
            for (const auto& b : members) {
                if (a.id == b.id) continue;
                if (precedes(a.shape, b.shape)) rel.emplace_back(a.id, b.id);
            }
        std::sort(rel.begin(), rel.end());
        return rel;
    }

    friend bool same_prec_order(const FrontResult& a, const FrontResult& b) {
        return a.ids() == b.ids() && a.relation_pairs() == b.relation_pairs();
    }
};

// Pareto front of an id-tagged point set: front members in staircase order
// (ties broken by id) plus the staircase of distinct front points.
struct PointFront {
    std::vector<std::pair<int, Point>> members;
    Staircase staircase;

    FrontResult as_front_result() const {
        FrontResult r;
        r.members.reserve(members.size());
        for (const auto& [id, p] : members) r.members.push_back({id, Rect::of_point(p)});
        return r;
    }
};

inline PointFront pareto_front(std::vector<std::pair<int, Point>> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a.second.x != b.second.x) return a.second.x > b.second.x;
        if (a.second.y != b.second.y) return a.second.y > b.second.y;
        return a.first < b.first;
    });
    PointFront out;
    std::size_t i = 0;
    bool have_best = false;
    Rational best; // max y among strictly larger x
    while (i < pts.size()) {
        std::size_t j = i;
        while (j < pts.size() && pts[j].second.x == pts[i].second.x) ++j;
        for (std::size_t k = i; k < j; ++k)
            if (!have_best || pts[k].second.y >= best) out.members.push_back(pts[k]);
        if (!have_best || pts[i].second.y > best) {
            best = pts[i].second.y;
            have_best = true;
        }
        i = j;
    }
    std::reverse(out.members.begin(), out.members.end());
    // staircase order within the reversed list: x asc; fix y/id ordering in groups
    std::stable_sort(out.members.begin(), out.members.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second.x != b.second.x) return a.second.x < b.second.x;
                         if (a.second.y != b.second.y) return a.second.y > b.second.y;
                         return a.first < b.first;
                     });
    std::vector<Point> stairs;
    for (const auto& [id, p] : out.members)
        if (stairs.empty() || stairs.back() != p) stairs.push_back(p);
    out.staircase = Staircase(std::move(stairs));
    return out;
}

// Regions whose top-right corner is not strictly dominated by another
// region's top-right corner, in staircase order, plus that staircase.
struct OuterFront {
    std::vector<int> ids;
    Staircase staircase;
};

inline OuterFront outer_pareto_front(const Family& f, const std::vector<int>& ids) {
    std::vector<std::pair<int, Point>> trs;
    trs.reserve(ids.size());
    for (int id : ids) trs.emplace_back(id, f[id].shape.tr());
    PointFront pf = pareto_front(std::move(trs));
    OuterFront out;
    out.staircase = std::move(pf.staircase);
    out.ids.reserve(pf.members.size());
    for (auto& [id, p] : pf.members) out.ids.push_back(id);
    return out;
}

inline OuterFront outer_pareto_front(const Family& f) {
    std::vector<int> ids(f.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = int(i);
    return outer_pareto_front(f, ids);
}

// Fully reveal a realization and build its front: the ground-truth oracle.
inline FrontResult retrieve_everything_front(const std::vector<Point>& realization) {
    std::vector<std::pair<int, Point>> pts;
    pts.reserve(realization.size());
    for (std::size_t i = 0; i < realization.size(); ++i) pts.emplace_back(int(i), realization[i]);
    return pareto_front(std::move(pts)).as_front_result();
}

} // namespace parfront
