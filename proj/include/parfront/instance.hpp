#pragma once

#include "parfront/analysis.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parfront {

// Instance file: integer coordinates under one global denominator, so the
// files stay human-writable while the arithmetic stays exact.
struct InstanceFile {
    int version = 1;
    std::int64_t denominator = 1;
    std::vector<std::array<std::int64_t, 4>> regions;
    std::optional<std::vector<std::array<std::int64_t, 2>>> realization;
    std::optional<std::int64_t> unit_side;
    std::string kind = "custom";

    std::size_t size() const { return regions.size(); }

    std::vector<Rect> to_rects() const {
        std::vector<Rect> out;
        out.reserve(regions.size());
        for (const auto& r : regions)
            out.push_back(Rect{Rational(r[0], denominator), Rational(r[1], denominator),
                               Rational(r[2], denominator), Rational(r[3], denominator)});
        return out;
    }
    std::vector<Point> to_points() const {
        if (!realization) throw std::invalid_argument("instance has no realization");
        std::vector<Point> out;
        out.reserve(realization->size());
        for (const auto& p : *realization)
            out.push_back(Point{Rational(p[0], denominator), Rational(p[1], denominator)});
        return out;
    }
    Rational side() const {
        if (!unit_side) throw std::invalid_argument("instance has no unit_side");
        return Rational(*unit_side, denominator);
    }

    void validate() const {
        if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
        for (const auto& r : regions)
            if (r[0] > r[2] || r[1] > r[3]) throw std::invalid_argument("invalid region");
        if (realization) {
            if (realization->size() != regions.size())
                throw std::invalid_argument("realization size mismatch");
            for (std::size_t i = 0; i < regions.size(); ++i) {
                const auto& r = regions[i];
                const auto& p = (*realization)[i];
                if (p[0] < r[0] || p[0] > r[2] || p[1] < r[1] || p[1] > r[3])
                    throw std::invalid_argument("realization point outside its region");
            }
        }
        if (unit_side) {
            for (const auto& r : regions)
                if (r[2] - r[0] != *unit_side || r[3] - r[1] != *unit_side)
                    throw std::invalid_argument("unit_side does not match a region");
        }
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["version"] = version;
        j["kind"] = kind;
        j["denominator"] = denominator;
        if (unit_side) j["unit_side"] = *unit_side;
        j["regions"] = regions;
        if (realization) j["realization"] = *realization;
        return j;
    }
    std::string emit() const { return to_json().dump(); }

    static InstanceFile parse(const std::string& text) {
        nlohmann::json j = nlohmann::json::parse(text);
        InstanceFile f;
        f.version = j.at("version").get<int>();
        f.denominator = j.at("denominator").get<std::int64_t>();
        if (j.contains("kind")) f.kind = j["kind"].get<std::string>();
        f.regions = j.at("regions").get<std::vector<std::array<std::int64_t, 4>>>();
        if (j.contains("unit_side")) f.unit_side = j["unit_side"].get<std::int64_t>();
        if (j.contains("realization"))
            f.realization = j["realization"].get<std::vector<std::array<std::int64_t, 2>>>();
        f.validate();
        return f;
    }
};

// Deterministic workload generators, including the adversarial constructions
// used by the lower-bound checks.
inline InstanceFile generate(const std::string& kind, std::int64_t n, std::uint64_t seed,
                             const std::map<std::string, std::int64_t>& params = {}) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    auto param = [&](const std::string& k, std::int64_t dflt) {
        auto it = params.find(k);
        return it == params.end() ? dflt : it->second;
    };
    Rng rng(seed);
    InstanceFile f;
    f.kind = kind;
    f.denominator = 1;
    std::vector<std::array<std::int64_t, 2>> pts;

    if (kind == "identical-squares") {
        const std::int64_t s = n + 1;
        f.unit_side = s;
        std::vector<std::int64_t> ys; ys.resize(std::size_t(n));
        for (std::int64_t i = 0; i < n; ++i) ys[std::size_t(i)] = i + 1;
        for (std::int64_t i = n - 1; i > 0; --i)
            std::swap(ys[std::size_t(i)], ys[std::size_t(rng.below(std::uint64_t(i + 1)))]);
        for (std::int64_t i = 0; i < n; ++i) {
            f.regions.push_back({0, 0, s, s});
            pts.push_back({i + 1, ys[std::size_t(i)]});
        }
    } else if (kind == "all-independent") {
        const std::int64_t s = 4;
        f.unit_side = s;
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t x = 8 * i, y = -8 * i;
            f.regions.push_back({x, y, x + s, y + s});
            pts.push_back({x + rng.range(0, s), y + rng.range(0, s)});
        }
    } else if (kind == "bl-corners") {
        // identical twins along a staircase: every region has a facet twin,
        // so nothing is independent and the bottom-left realization forces
        // every region to be retrieved
        std::int64_t m = n < 2 ? 1 : n / 2; // odd leftovers triple up with the last pair
        std::vector<std::array<std::int64_t, 4>> shapes;
        for (std::int64_t k = 0; k < m; ++k) {
            std::int64_t w = 4 + rng.range(0, 3), h = 4 + rng.range(0, 3);
            std::int64_t x = 8 * k, y = -8 * k;
            shapes.push_back({x, y - h, x + w, y});
        }
        for (std::int64_t i = 0; i < n; ++i) {
            auto s = shapes[std::size_t(std::min(i / 2, m - 1))];
            f.regions.push_back(s);
            pts.push_back({s[0], s[1]});
        }
    } else if (kind == "tr-corners") {
        // nested rectangles; the top-right realization finishes after one
        // retrieval, the innermost region is the only independent one
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t r = 2 * (n - i);
            f.regions.push_back({-r, -r, r, r});
            pts.push_back({r, r});
        }
    } else if (kind == "cluster-front") {
        if (n < 3) throw std::invalid_argument("cluster-front needs n >= 3");
        const std::int64_t fsz = n - 2;
        const std::int64_t s = 4 * fsz;
        const std::int64_t L = 1000;
        f.regions.push_back({L, -L - 4, L + 4, -L});
        pts.push_back({L, -L - 4});
        f.regions.push_back({-L - 4, L, -L, L + 4});
        pts.push_back({-L - 4, L});
        std::vector<std::int64_t> xs; xs.resize(std::size_t(fsz));
        for (std::int64_t i = 0; i < fsz; ++i) xs[std::size_t(i)] = i;
        for (std::int64_t i = fsz - 1; i > 0; --i)
            std::swap(xs[std::size_t(i)], xs[std::size_t(rng.below(std::uint64_t(i + 1)))]);
        for (std::int64_t i = 0; i < fsz; ++i) {
            f.regions.push_back({fsz + 1 - s, fsz + 1 - s, fsz + 1, fsz + 1});
            pts.push_back({1 + xs[std::size_t(i)], 1 + (fsz - 1 - xs[std::size_t(i)])});
        }
    } else if (kind == "random-rects") {
        const std::int64_t span = param("span", 32);
        const std::int64_t maxw = param("maxw", 16);
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t x = rng.range(0, span), y = rng.range(0, span);
            std::int64_t w = rng.range(0, maxw), h = rng.range(0, maxw);
            f.regions.push_back({x, y, x + w, y + h});
            pts.push_back({x + rng.range(0, w), y + rng.range(0, h)});
        }
    } else if (kind == "staircase-squares") {
        // piles of unit squares jittered around a descending staircase; the
        // inner front wiggles through the pile cells, so all three types occur
        const std::int64_t s = param("side", 8);
        const std::int64_t step = param("step", s / 2);
        const std::int64_t pile = param("pile", 4);
        const std::int64_t jx = param("jx", s / 4);
        const std::int64_t jy = param("jy", 2 * s);
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t k = i / pile;
            std::int64_t x = step * k + rng.range(0, jx);
            std::int64_t y = -step * k + rng.range(0, jy);
            f.regions.push_back({x - s, y - s, x, y});
            pts.push_back({x - rng.range(0, s), y - rng.range(0, s)});
        }
        f.unit_side = s;
    } else {
        throw std::invalid_argument("unknown generator kind: " + kind);
    }
    f.realization = pts;
    f.validate();
    return f;
}

enum class Algo { reference, reference_layered, rectangles, unit_squares };

inline const char* algo_name(Algo a) {
    switch (a) {
    case Algo::reference: return "reference";
    case Algo::reference_layered: return "reference-layered";
    case Algo::rectangles: return "rectangles";
    case Algo::unit_squares: return "unit-squares";
    }
    return "?";
}

inline std::optional<Algo> algo_from_name(const std::string& s) {
    if (s == "reference") return Algo::reference;
    if (s == "reference-layered") return Algo::reference_layered;
    if (s == "rectangles") return Algo::rectangles;
    if (s == "unit-squares") return Algo::unit_squares;
    return std::nullopt;
}

inline StrategyResult solve_instance(const InstanceFile& inst, Algo algo,
                                     const RunOptions& opts = {}) {
    Preprocessed pre = preprocess(inst.to_rects());
    RetrievalOracle oracle(pre.family, inst.to_points());
    switch (algo) {
    case Algo::reference: return run_algorithm1(pre, oracle, opts);
    case Algo::reference_layered: return run_algorithm1_2(pre, oracle, opts);
    case Algo::rectangles: return reconstruct_rectangles(pre, oracle, opts);
    case Algo::unit_squares: return reconstruct_unit_squares(pre, oracle, inst.side(), opts);
    }
    throw std::logic_error("unreachable");
}

} // namespace parfront
