#include "parfront/recon_rectangles.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace parfront;
using namespace parfront::testing;

namespace {

RunOptions strict() {
    RunOptions o;
    o.strict_checks = true;
    return o;
}

void cross_check(const std::vector<Rect>& regs, const std::vector<Point>& real) {
    Preprocessed pre = preprocess(regs);
    RetrievalOracle o1(pre.family, real);
    RetrievalOracle o2(pre.family, real);
    StrategyResult fast = reconstruct_rectangles(pre, o1, strict());
    StrategyResult ref = run_algorithm1_2(pre, o2, strict());
    CHECK(fast.sorted_ids() == ref.sorted_ids());
    CHECK(fast.stage_ids(2) == ref.stage_ids(2));
    CHECK(fast.stage_ids(3) == ref.stage_ids(3));
    CHECK(finished(fast.final_family));
    CHECK(same_prec_order(fast.front, retrieve_everything_front(real)));
    if (regs.size() <= 8) {
        auto mr = min_retrievals(Family(regs), real);
        REQUIRE(mr.has_value());
        CHECK(int(fast.log.size()) <= 5 * mr->count);
        CHECK(int(fast.log.size()) >= mr->count);
    }
}

} // namespace

TEST_CASE("retrieved-point front: dominance queries and staircase") {
    PhiFront phi;
    CHECK_FALSE(phi.insert(0, pt(5, 5)));
    CHECK_FALSE(phi.insert(1, pt(3, 7)));
    CHECK(phi.insert(2, pt(2, 2)));  // strictly dominated by (5,5)
    CHECK_FALSE(phi.insert(3, pt(5, 7))); // dominates both earlier maxima
    CHECK(phi.strictly_dominates(pt(4, 6)));
    CHECK_FALSE(phi.strictly_dominates(pt(5, 7)));
    CHECK_FALSE(phi.strictly_dominates(pt(5, 0))); // same x as the maximum
    Staircase st = phi.staircase();
    REQUIRE(st.size() == 3); // (3,7) survives: equal y is not strict dominance
    CHECK(st[0] == pt(3, 7));
    CHECK(st[1] == pt(5, 7));
    CHECK(st[2] == pt(5, 5));
}

TEST_CASE("nested family needs a single retrieval at top-right corners") {
    std::vector<Rect> regs{Rect{0, 0, 10, 10}, Rect{0, 0, 8, 8}, Rect{0, 0, 6, 6},
                           Rect{0, 0, 6, 6}};
    Family f(regs);
    std::vector<Point> real = corner_realization(f, true);
    Preprocessed pre = preprocess(regs);
    RetrievalOracle oracle(pre.family, real);
    StrategyResult res = reconstruct_rectangles(pre, oracle, strict());
    CHECK(int(res.log.size()) == 1);
    cross_check(regs, real);

    // bottom-left corners leave nothing dominated: everything is retrieved
    std::vector<Point> bl = corner_realization(f, false);
    Preprocessed p2 = preprocess(regs);
    RetrievalOracle o2(p2.family, bl);
    StrategyResult res2 = reconstruct_rectangles(p2, o2, strict());
    CHECK(int(res2.log.size()) == 4);
    cross_check(regs, bl);
}

TEST_CASE("all-independent family goes straight to the merge") {
    std::vector<Rect> regs;
    for (int i = 0; i < 6; ++i)
        regs.push_back(Rect{Rational(8 * i), Rational(-8 * i), Rational(8 * i + 4),
                            Rational(-8 * i + 4)});
    Family f(regs);
    std::vector<Point> real = corner_realization(f, false);
    Preprocessed pre = preprocess(regs);
    RetrievalOracle oracle(pre.family, real);
    StrategyResult res = reconstruct_rectangles(pre, oracle, strict());
    CHECK(res.log.empty());
    CHECK(res.front.ids() == std::vector<int>{0, 1, 2, 3, 4, 5});
    cross_check(regs, real);
}

TEST_CASE("identical squares are all retrieved") {
    int n = 6;
    std::vector<Rect> regs(std::size_t(n), Rect{0, 0, Rational(n + 1), Rational(n + 1)});
    std::vector<Point> real;
    for (int i = 0; i < n; ++i) real.push_back(pt(i + 1, n - i));
    Preprocessed pre = preprocess(regs);
    RetrievalOracle oracle(pre.family, real);
    StrategyResult res = reconstruct_rectangles(pre, oracle, strict());
    CHECK(int(res.log.size()) == n);
    cross_check(regs, real);
}

TEST_CASE("random cross-implementation equality") {
    Rng rng(401);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 1 + int(rng.below(8));
        std::vector<Rect> regs = random_regions(rng, n, 12, 8);
        Family f(regs);
        cross_check(regs, random_realization(rng, f));
    }
    // denser overlapping instances at moderate size
    for (int iter = 0; iter < 40; ++iter) {
        int n = 20 + int(rng.below(60));
        std::vector<Rect> regs = random_regions(rng, n, 40, 25);
        Family f(regs);
        cross_check(regs, random_realization(rng, f));
    }
}

TEST_CASE("corner realizations across random families") {
    Rng rng(409);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 1 + int(rng.below(8));
        std::vector<Rect> regs = random_regions(rng, n, 12, 8);
        Family f(regs);
        cross_check(regs, corner_realization(f, bool(rng.below(2))));
    }
}

TEST_CASE("work counters are attached to the run") {
    std::vector<Rect> regs{Rect{0, 0, 10, 10}, Rect{0, 0, 8, 8}, Rect{2, 2, 12, 12}};
    Family f(regs);
    std::vector<Point> real = corner_realization(f, false);
    Preprocessed pre = preprocess(regs);
    RetrievalOracle oracle(pre.family, real);
    StrategyResult res = reconstruct_rectangles(pre, oracle);
    CHECK(res.counters.retrievals == res.log.size());
    CHECK(res.counters.comparisons > 0);
}
