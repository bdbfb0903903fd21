#include <doctest.h>

#include <numeric>
#include <set>

#include "loyd/configuration.hpp"
#include "loyd/errors.hpp"
#include "loyd/group.hpp"
#include "loyd/permutation.hpp"
#include "loyd/rng.hpp"

using namespace loyd;

namespace {

Configuration random_configuration(int n, Rng& rng) {
    std::vector<int> at(static_cast<std::size_t>(n * n));
    std::iota(at.begin(), at.end(), 0);
    rng.shuffle(std::span<int>(at));
    return Configuration::from_layout(n, at);
}

}  // namespace

TEST_SUITE("puzzle_core") {

TEST_CASE("torus arithmetic wraps and measures") {
    Torus t(5);
    CHECK(t.add({4, 4}, {1, 2}) == Point{0, 1});
    CHECK(t.sub({0, 0}, {1, 0}) == Point{4, 0});
    CHECK(t.abs(4) == 1);
    CHECK(t.abs(2) == 2);
    CHECK(t.l1({4, 3}) == 3);
    CHECK(t.index({1, 2}) == 11);
    CHECK(t.point(11) == Point{1, 2});
    CHECK_THROWS_AS(Torus(1), std::invalid_argument);
}

TEST_CASE("move then inverse move restores") {
    Rng rng(1);
    for (int n : {2, 3, 4, 5}) {
        for (int i = 0; i < 50; ++i) {
            Configuration c = random_configuration(n, rng);
            for (Direction d : all_directions) CHECK(apply_move(apply_move(c, d), opposite(d)) == c);
        }
    }
}

TEST_CASE("n=2 right move from solved") {
    Configuration c = apply_move(Configuration::solved(2), Direction::right);
    CHECK(c.hole() == Point{1, 0});
    CHECK(c.at(0) == 1);
    CHECK(c.position_of(2) == 2);
    CHECK(c.position_of(3) == 3);
}

TEST_CASE("n=2 left and right reach the same cell") {
    auto a = apply_move(Configuration::solved(2), Direction::left);
    auto b = apply_move(Configuration::solved(2), Direction::right);
    CHECK(a == b);
}

TEST_CASE("parity by cycles") {
    CHECK(permutation_parity(identity_permutation(6)) == Parity::even);
    std::vector<int> p = identity_permutation(6);
    std::swap(p[1], p[4]);
    CHECK(permutation_parity(p) == Parity::odd);
    std::vector<int> cyc3{1, 2, 0};
    CHECK(permutation_parity(cyc3) == Parity::even);
    std::vector<int> bad{0, 0, 1};
    CHECK_THROWS_AS(permutation_parity(bad), std::invalid_argument);
}

TEST_CASE("parity of composition is the sum") {
    Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
        int m = 2 + rng.below(9);
        auto p = identity_permutation(m), q = identity_permutation(m);
        rng.shuffle(std::span<int>(p));
        rng.shuffle(std::span<int>(q));
        CHECK((permutation_parity(then(p, q)) == (permutation_parity(p) ^ permutation_parity(q))));
    }
}

TEST_CASE("a single translation is an odd position permutation") {
    for (int n : {2, 3, 4, 5}) {
        Torus t(n);
        for (int i = 1; i < n * n; ++i) {
            Configuration c = Configuration::solved(n);
            c.translate_hole(t.point(i));
            CHECK(c.parity() == Parity::odd);
        }
    }
}

TEST_CASE("omega membership") {
    Configuration s = Configuration::solved(4);
    CHECK(s.in_omega());
    CHECK(apply_move(s, Direction::up).in_omega());
    Configuration swapped = s;
    swapped.swap_positions(1, 2);
    CHECK_FALSE(swapped.in_omega());
}

TEST_CASE("moves preserve omega for even n") {
    Rng rng(3);
    for (int n : {2, 4, 6}) {
        for (int i = 0; i < 200; ++i) {
            Configuration c = random_configuration(n, rng);
            for (Direction d : all_directions) CHECK(apply_move(c, d).in_omega() == c.in_omega());
        }
    }
}

TEST_CASE("moves are injective per direction") {
    Rng rng(4);
    for (Direction d : all_directions) {
        std::set<std::vector<int>> seen_in, seen_out;
        for (int i = 0; i < 300; ++i) {
            Configuration c = random_configuration(3, rng);
            if (!seen_in.insert(c.layout()).second) continue;
            CHECK(seen_out.insert(apply_move(c, d).layout()).second);
        }
    }
}

TEST_CASE("json round trip") {
    Rng rng(5);
    Configuration c = random_configuration(4, rng);
    CHECK(Configuration::from_json(c.to_json()) == c);
    CHECK(Configuration::solved(2).to_json() == "[0,1,2,3]");
    CHECK_THROWS_AS(Configuration::from_json("[0,1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(Configuration::from_json("[0,1,1,3]"), std::invalid_argument);
}

TEST_CASE("rank and unrank agree") {
    Rng rng(6);
    for (int i = 0; i < 1000; ++i) {
        auto p = identity_permutation(9);
        rng.shuffle(std::span<int>(p));
        CHECK(unrank_permutation(rank_permutation(p), 9) == p);
    }
    CHECK(rank_permutation(identity_permutation(9)) == 0);
}

TEST_CASE("reachable set n=2 is omega") {
    auto r = reachable_set(Configuration::solved(2));
    CHECK(r.count == 12);
    CHECK(r.omega_size == 12);
    CHECK(r.equals_omega);
    CHECK(r.stayed_in_start_class);
}

TEST_CASE("reachable set n=2 from the other class stays there") {
    Configuration c = Configuration::solved(2);
    c.swap_positions(1, 2);
    auto r = reachable_set(c);
    CHECK(r.count == 12);
    CHECK(r.stayed_in_start_class);
    CHECK_FALSE(r.equals_omega);
}

TEST_CASE("reachable set n=3 is everything") {
    auto r = reachable_set(Configuration::solved(3));
    CHECK(r.count == 362880);
    CHECK(r.equals_everything);
}

TEST_CASE("reachable set refuses n=4") {
    CHECK_THROWS_AS(reachable_set(Configuration::solved(4)), CapacityError);
}

}
