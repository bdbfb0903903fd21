#include <doctest.h>

#include <cmath>
#include <numeric>

#include "loyd/chains.hpp"
#include "loyd/configuration.hpp"
#include "loyd/group.hpp"
#include "loyd/group_chains.hpp"
#include "loyd/rng.hpp"

using namespace loyd;

namespace {

Point random_point(int n, Rng& rng) { return {rng.below(n), rng.below(n)}; }

MoveString random_string(int n, int len, Rng& rng) {
    MoveString s{n, {}};
    for (int i = 0; i < len; ++i) s.moves.push_back(random_point(n, rng));
    return s;
}

Configuration random_configuration(int n, Rng& rng) {
    std::vector<int> at(static_cast<std::size_t>(n * n));
    std::iota(at.begin(), at.end(), 0);
    rng.shuffle(std::span<int>(at));
    return Configuration::from_layout(n, at);
}

}  // namespace

TEST_SUITE("group_walks") {

TEST_CASE("zero translation is the identity") {
    for (int n : {2, 3, 4}) CHECK(translation_move(n, {0, 0}) == identity_element(n));
}

TEST_CASE("translation sends the target tile to minus y") {
    GroupElement g = translation_move(4, {0, 1});
    Torus t(4);
    CHECK(g.offset == Point{0, 1});
    CHECK(g.rel[static_cast<std::size_t>(t.index({0, 1}))] == t.index({0, 3}));
    CHECK(g.rel[static_cast<std::size_t>(t.index({2, 2}))] == t.index({2, 1}));
}

TEST_CASE("y times minus y is the identity") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + rng.below(6);
        Torus t(n);
        Point y = random_point(n, rng);
        CHECK(translation_move(n, y) * translation_move(n, t.neg(y)) == identity_element(n));
    }
}

TEST_CASE("group law is associative with inverses") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + rng.below(4);
        GroupElement a = evaluate(random_string(n, 5, rng));
        GroupElement b = evaluate(random_string(n, 5, rng));
        GroupElement c = evaluate(random_string(n, 5, rng));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * inverse(a) == identity_element(n));
        CHECK(inverse(a) * a == identity_element(n));
    }
}

TEST_CASE("classify moves") {
    CHECK(classify_move(4, {0, 0}) == MoveClass::good);
    CHECK(classify_move(4, {1, 0}) == MoveClass::good);
    CHECK(classify_move(4, {1, 1}) == MoveClass::bad);
    CHECK(classify_move(4, {2, 0}) == MoveClass::bad);
    CHECK_THROWS_AS(classify_move(5, {1, 0}), std::invalid_argument);
}

TEST_CASE("point sets have the expected sizes") {
    for (int n : {2, 4, 6}) {
        CHECK(odd_points(n).size() == static_cast<std::size_t>(n * n / 2));
        CHECK(good_points(n).size() == static_cast<std::size_t>(n * n / 2 + 1));
        CHECK(bad_points(n).size() == static_cast<std::size_t>(n * n / 2 - 1));
    }
    CHECK(near_points(8).size() == 4 + 12);
}

TEST_CASE("loyd support is four moves of one eighth plus holding") {
    Support s = MoveDistribution(ChainTag::loyd, 5).support();
    int moves = 0;
    double hold = 0.0;
    for (const auto& [k, p] : s) {
        if (k == StringKey{0}) {
            hold = p;
        } else {
            ++moves;
            CHECK(k.size() == 1);
            CHECK(p == doctest::Approx(0.125).epsilon(1e-15));
        }
    }
    CHECK(moves == 4);
    CHECK(hold == doctest::Approx(0.5));
}

TEST_CASE("enumerable supports sum to one and are symmetric") {
    for (ChainTag tag : {ChainTag::loyd, ChainTag::hc, ChainTag::pc, ChainTag::nl, ChainTag::bgb}) {
        for (int n : {2, 4, 6}) {
            Support s = MoveDistribution(tag, n).support();
            double total = 0.0;
            for (const auto& kv : s) total += kv.second;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(is_symmetric(s, n));
        }
    }
    Support odd = MoveDistribution(ChainTag::hc, 5).support();
    CHECK(is_symmetric(odd, 5));
}

TEST_CASE("or samples always land in omega") {
    Rng rng(13);
    for (int n : {2, 4, 6}) {
        MoveDistribution d(ChainTag::or_chain, n);
        for (int i = 0; i < 2000; ++i) CHECK(in_omega(evaluate(d.sample(rng))));
    }
}

TEST_CASE("pc and bgb samples land in omega") {
    Rng rng(14);
    for (ChainTag tag : {ChainTag::pc, ChainTag::bgb}) {
        MoveDistribution d(tag, 6);
        for (int i = 0; i < 2000; ++i) CHECK(in_omega(evaluate(d.sample(rng))));
    }
}

TEST_CASE("or single good move frequency at n=10") {
    ChainOptions opts;
    opts.holding = false;
    opts.or_holding = OrHolding::skipped;
    MoveDistribution d(ChainTag::or_chain, 10, opts);
    Rng rng(15);
    const int draws = 100000;
    int single = 0;
    for (int i = 0; i < draws; ++i) {
        MoveString s = d.sample(rng);
        if (s.size() == 1) {
            CHECK(classify_move(10, s.moves[0]) == MoveClass::good);
            ++single;
        }
    }
    const double p = 50.0 / 99.0;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(single / double(draws) - p) < 3 * sigma);
}

TEST_CASE("or cap raises") {
    ChainOptions opts;
    opts.holding = false;
    opts.or_cap = 1;
    MoveDistribution d(ChainTag::or_chain, 4, opts);
    Rng rng(16);
    bool raised = false;
    for (int i = 0; i < 200 && !raised; ++i) {
        try {
            d.sample(rng);
        } catch (const CappedSampleError&) {
            raised = true;
        }
    }
    CHECK(raised);
}

TEST_CASE("empty string evaluates to the identity") {
    CHECK(evaluate(MoveString{4, {}}) == identity_element(4));
}

TEST_CASE("evaluation of a concatenation is the product") {
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        int n = 2 + rng.below(5);
        MoveString a = random_string(n, rng.below(6), rng), b = random_string(n, rng.below(6), rng);
        CHECK(evaluate(concat(a, b)) == evaluate(a) * evaluate(b));
        CHECK(evaluate(a) == evaluate_by_product(a));
    }
    CHECK_THROWS_AS(concat(MoveString{3, {}}, MoveString{4, {}}), std::invalid_argument);
}

TEST_CASE("plaquette loop is a three cycle") {
    const int n = 4;
    MoveString s{n, {{1, 0}, {0, 1}, {n - 1, 0}, {0, n - 1}}};
    Configuration c = Configuration::solved(n);
    for (Direction d : {Direction::right, Direction::up, Direction::left, Direction::down}) c.apply_move(d);
    CHECK(configuration_of(evaluate(s)) == c);
    CHECK(c.hole() == Point{0, 0});
    int moved = 0;
    for (int p = 0; p < c.size(); ++p) moved += c.at(p) != p;
    CHECK(moved == 3);
}

TEST_CASE("playback agrees with the group encoding") {
    Rng rng(18);
    for (int i = 0; i < 10000; ++i) {
        int n = 2 + rng.below(5);
        Configuration c = random_configuration(n, rng);
        MoveString s = random_string(n, rng.below(8), rng);
        Configuration played = c;
        play(played, s);
        CHECK(configuration_of(element_of(c) * evaluate(s)) == played);
    }
}

TEST_CASE("uniform is stationary on the n=2 chains") {
    PuzzleStates omega(2, true);
    for (ChainTag tag : {ChainTag::loyd, ChainTag::pc, ChainTag::nl, ChainTag::bgb}) {
        auto c = puzzle_chain(omega, MoveDistribution(tag, 2).support());
        Vector u = Vector::Constant(omega.size(), 1.0 / omega.size());
        CHECK((u.transpose() * c.kernel() - u.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("loyd on n=3 generates the full group") {
    CHECK(reachable_set(Configuration::solved(3)).equals_everything);
}

TEST_CASE("transposition chains on labels") {
    Rng rng(19);
    for (int i = 0; i < 1000; ++i) {
        Transposition t = sample_rt(9, false, rng);
        CHECK(t.a != t.b);
        Transposition h = sample_hc_labels(9, false, rng);
        CHECK(h.a == 0);
        CHECK(h.b != 0);
    }
    auto p = evaluate_labels(4, {{1, 2}});
    CHECK(p == std::vector<int>{0, 2, 1, 3});
}

}
