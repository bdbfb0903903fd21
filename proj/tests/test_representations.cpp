#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "loyd/chains.hpp"
#include "loyd/comparison.hpp"
#include "loyd/configuration.hpp"
#include "loyd/group.hpp"
#include "loyd/ladder.hpp"
#include "loyd/representations.hpp"
#include "loyd/rng.hpp"

#include "fixtures.hpp"

using namespace loyd;

namespace {

// rows of a 2 x 5 strip on the n=5 torus, figure labels 1..9, 0 = hole
Configuration ladder_figure(const std::array<int, 5>& top, const std::array<int, 5>& bottom) {
    std::vector<int> at(25);
    for (int x = 0; x < 5; ++x) {
        at[static_cast<std::size_t>(x)] = bottom[static_cast<std::size_t>(x)];
        at[static_cast<std::size_t>(x + 5)] = top[static_cast<std::size_t>(x)];
    }
    for (int p = 10; p < 25; ++p) at[static_cast<std::size_t>(p)] = p;
    return Configuration::from_layout(5, at);
}

int count_of(const LabelString& s, Transposition z) {
    return static_cast<int>(std::count(s.begin(), s.end(), z));
}

bool odd_point(int n, Point p) {
    (void)n;
    return Torus::odd(p);
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("rt via hole swaps evaluates to the transposition") {
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const int m = 4 + rng.below(6);
        Transposition t = sample_rt(m, false, rng);
        LabelString s = represent_rt_via_hc(m, t);
        CHECK(s.size() == 3);
        CHECK(evaluate_labels(m, s) == evaluate_labels(m, {t}));
        for (auto z : s) CHECK(z.a == 0);
    }
    CHECK_THROWS_AS(represent_rt_via_hc(4, {2, 2}), std::invalid_argument);
}

TEST_CASE("rt via hole swaps counts") {
    LabelString s = represent_rt_via_hc(9, {3, 7});
    CHECK(count_of(s, {0, 3}) == 2);
    CHECK(count_of(s, {0, 7}) == 1);
}

TEST_CASE("rt-hc constant against a direct count") {
    for (int n : {2, 3, 4}) {
        const int m = n * n;
        // holding on both sides: p(z) = 1/(2(m-1)), each transposition 1/(m(m-1))
        double best = 0.0;
        for (int z = 1; z < m; ++z) {
            double mass = 0.0;
            for (int a = 0; a < m; ++a) {
                for (int b = a + 1; b < m; ++b) {
                    LabelString s = represent_rt_via_hc(m, {a, b});
                    mass += count_of(s, {0, z}) * double(s.size()) / (m * (m - 1.0));
                }
            }
            best = std::max(best, mass * 2 * (m - 1));
        }
        auto r = compare_rt_hc(n);
        CHECK(r.A == doctest::Approx(best).epsilon(1e-12));
        CHECK(r.A <= 12.0 * (m - 1) / m + 1e-12);
        CHECK(r.method == "exact-enumeration");
    }
}

TEST_CASE("rt hole transpositions use the holding move") {
    CHECK(represent_rt_via_hc(9, {0, 4}) == LabelString{{0, 0}, {0, 4}, {0, 0}});
    CHECK(represent_rt_via_hc(9, {4, 0}, false) == LabelString{{0, 4}});
    CHECK(evaluate_labels(9, represent_rt_via_hc(9, {0, 4})) == evaluate_labels(9, {{0, 4}}));
}

TEST_CASE("ladder phases reproduce the figures") {
    Configuration c = ladder_figure({1, 2, 3, 4, 5}, {0, 9, 8, 7, 6});
    const std::array<Configuration, 4> expected = {
        ladder_figure({2, 9, 4, 7, 0}, {1, 8, 3, 6, 5}),
        ladder_figure({2, 9, 4, 6, 7}, {1, 8, 3, 5, 0}),
        ladder_figure({1, 2, 8, 3, 6}, {5, 0, 9, 4, 7}),
        ladder_figure({1, 2, 3, 4, 0}, {5, 9, 8, 7, 6}),
    };
    auto phases = ladder_phases(4);
    std::size_t total = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        for (Direction d : phases[k]) c.apply_move(d);
        total += phases[k].size();
        CHECK(c == expected[k]);
    }
    CHECK(total == 9 * 4 - 3);
    CHECK_THROWS_AS(ladder_phases(3), std::invalid_argument);
}

TEST_CASE("or forms pass through") {
    MoveDistribution bgb(ChainTag::bgb, 6);
    Rng rng(22);
    MoveString g{6, {{1, 0}}};
    CHECK(or_form(6, g) == OrForm::good);
    auto rg = represent_or_via_bgb(g, bgb, rng);
    CHECK(rg.length() == 1);
    CHECK(flatten(rg) == g);

    MoveString bb{6, {{1, 1}, {2, 0}}};
    CHECK(or_form(6, bb) == OrForm::bad_bad);
    CHECK(represent_or_via_bgb(bb, bgb, rng).length() == 1);

    MoveString bgb1{6, {{1, 1}, {0, 1}, {2, 0}}};
    CHECK(or_form(6, bgb1) == OrForm::bad_goods_bad);
    auto r1 = represent_or_via_bgb(bgb1, bgb, rng);
    CHECK(r1.length() == 1);
    CHECK(flatten(r1) == bgb1);

    MoveString bad{6, {{1, 1}}};
    CHECK_THROWS_AS(or_form(6, bad), std::invalid_argument);
}

TEST_CASE("or via bgb emits k factors of the bgb support") {
    const int n = 6;
    MoveDistribution d(ChainTag::or_chain, n);
    MoveDistribution bgb(ChainTag::bgb, n);
    Support sup = bgb.support();
    Rng rng(23);
    for (int i = 0; i < 3000; ++i) {
        MoveString y = d.sample(rng);
        if (y.moves.empty() || (y.size() == 1 && y.moves[0] == Point{0, 0})) continue;
        Representation r = represent_or_via_bgb(y, bgb, rng);
        CHECK(evaluate(flatten(r)) == evaluate(y));
        if (or_form(n, y) == OrForm::bad_goods_bad) CHECK(r.length() == y.size() - 2);
        for (const auto& f : r.factors) CHECK(sup.count(key_of(f)) == 1);
    }
}

TEST_CASE("even odd even expansion") {
    const int n = 4;
    auto seven = expand_even_odd_even(n, {2, 0}, {1, 0}, {0, 2});
    CHECK(seven.size() == 7);
    for (Point p : seven) CHECK(odd_point(n, p));
    MoveString lhs{n, seven};
    MoveString rhs{n, {{2, 0}, {1, 0}, {0, 2}}};
    CHECK(evaluate(lhs) == evaluate(rhs));
}

TEST_CASE("bgb via pc is odd, exact and at most 14 long") {
    const int n = 6;
    MoveDistribution bgb(ChainTag::bgb, n);
    Rng rng(24);
    std::size_t longest = 0;
    for (int i = 0; i < 100000; ++i) {
        MoveString y = bgb.sample(rng);
        Representation r = represent_bgb_via_pc(y, bgb, rng);
        longest = std::max(longest, r.length());
        if (i % 50 == 0) {
            CHECK(evaluate(flatten(r)) == evaluate(y));
            for (const auto& f : r.factors) {
                REQUIRE(f.size() == 1);
                CHECK((odd_point(n, f.moves[0]) || f.moves[0] == Point{0, 0}));
            }
        }
    }
    CHECK(longest == 14);
}

TEST_CASE("pc via nl for the tile above") {
    for (int n : {4, 6, 8}) {
        const auto& s = represent_pc_via_nl(n, {0, 1});
        for (Point p : s) CHECK(is_near_move(n, p));
        CHECK(evaluate(MoveString{n, s}) == translation_move(n, {0, 1}));
    }
}

TEST_CASE("pc via nl over all odd moves") {
    for (int n : {4, 6, 8, 10}) {
        std::size_t longest = 0;
        for (Point y : odd_points(n)) {
            const auto& s = represent_pc_via_nl(n, y);
            for (Point p : s) CHECK(is_near_move(n, p));
            CHECK(evaluate(MoveString{n, s}) == translation_move(n, y));
            longest = std::max(longest, s.size());
        }
        CHECK(double(longest) / n <= fixtures::pc_nl_length_per_n);
    }
}

TEST_CASE("nl via loyd") {
    CHECK(represent_nl_via_loyd(6, {1, 0}) == std::vector<Point>{{1, 0}});
    const auto& s = represent_nl_via_loyd(6, {1, 2});
    CHECK(s.size() <= 40);
    CHECK(evaluate(MoveString{6, s}) == translation_move(6, {1, 2}));
    for (Point p : near_points(6)) {
        const auto& r = represent_nl_via_loyd(6, p);
        for (Point q : r) CHECK(Torus(6).l1(q) == 1);
        CHECK(evaluate(MoveString{6, r}) == translation_move(6, p));
    }
    CHECK_THROWS_AS(represent_nl_via_loyd(6, {1, 1}), std::invalid_argument);
}

TEST_CASE("hc via loyd on odd n") {
    CHECK(evaluate(MoveString{5, represent_hc_via_loyd(5, {2, 0})}) == translation_move(5, {2, 0}));
    CHECK(represent_hc_via_loyd(5, {1, 0}) == std::vector<Point>{{1, 0}});
    for (int n : {3, 5, 7}) {
        for (Point y : nonzero_points(n)) {
            auto s = represent_hc_via_loyd(n, y);
            for (Point q : s) CHECK(Torus(n).l1(q) == 1);
            CHECK(evaluate(MoveString{n, s}) == translation_move(n, y));
            CHECK(double(s.size()) / n <= fixtures::hc_loyd_length_per_n);
        }
    }
    CHECK_THROWS_AS(represent_hc_via_loyd(4, {1, 0}), std::invalid_argument);
}

TEST_CASE("every layer preserves evaluation on random moves") {
    Rng rng(25);
    for (auto layer : {Layer::rt_hc, Layer::or_bgb, Layer::bgb_pc, Layer::pc_nl, Layer::nl_loyd}) {
        for (int i = 0; i < 1000; ++i) CHECK(sample_and_check(layer, 4, rng).ok);
    }
    for (int i = 0; i < 1000; ++i) CHECK(sample_and_check(Layer::hc_loyd, 5, rng).ok);
}

TEST_CASE("layer names round trip") {
    for (auto layer : {Layer::rt_hc, Layer::or_bgb, Layer::bgb_pc, Layer::pc_nl, Layer::nl_loyd, Layer::hc_loyd})
        CHECK(layer_from_string(to_string(layer)) == layer);
    CHECK_THROWS_AS(layer_from_string("nope"), std::invalid_argument);
}

TEST_CASE("or-bgb series agrees with monte carlo") {
    for (auto holding : {OrHolding::skipped, OrHolding::counted}) {
        ChainOptions opts;
        opts.or_holding = holding;
        auto exact = compare_or_bgb_series(4, opts);
        Rng rng(26);
        auto mc = compare_or_bgb_monte_carlo(4, opts, 200000, rng);
        double se = 0.0;
        for (const auto& kv : mc.std_error) se = std::max(se, kv.second);
        CHECK(mc.samples == 200000);
        CHECK_FALSE(mc.low_confidence);
        CHECK(std::abs(mc.A - exact.A) <= 5 * se + 1e-9);
    }
    Rng rng(27);
    CHECK(compare_or_bgb_monte_carlo(4, {}, 100, rng).low_confidence);
}

TEST_CASE("bgb-pc constant is below 196") {
    for (int n : {2, 4, 6}) CHECK(compare_bgb_pc(n).A <= 196.0);
}

TEST_CASE("deterministic layers at n=2 use single moves") {
    CHECK(compare_deterministic("pc-nl", 2).A == doctest::Approx(1.0));
    CHECK(compare_deterministic("nl-loyd", 2).A == doctest::Approx(1.0));
}

}
