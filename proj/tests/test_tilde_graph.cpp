#include <doctest.h>

#include <cmath>
#include <numeric>

#include "loyd/ruin_walks.hpp"
#include "loyd/rng.hpp"
#include "loyd/tilde_graph.hpp"

using namespace loyd;

TEST_SUITE("tilde_graph") {

TEST_CASE("construction") {
    TildeGraph g(5);
    CHECK(g.size() == 24);
    const int v = g.vertex({1, 0});
    CHECK(g.degree(v) == 4);
    CHECK(g.neighbour(v, Direction::left) == g.vertex({4, 0}));
    CHECK(g.neighbour(g.vertex({0, 1}), Direction::down) == g.vertex({0, 4}));
    CHECK_THROWS_AS(g.vertex({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(TildeGraph(2), std::invalid_argument);
}

TEST_CASE("every vertex has degree four") {
    for (int n = 3; n <= 64; ++n) {
        TildeGraph g(n);
        for (int v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 4);
    }
}

TEST_CASE("uniform is stationary") {
    TildeGraph g(6);
    std::vector<double> u(static_cast<std::size_t>(g.size()), 1.0 / g.size()), out;
    g.step(u, out);
    for (double x : out) CHECK(x == doctest::Approx(1.0 / g.size()).epsilon(1e-14));
}

TEST_CASE("relative position walks on the graph") {
    Rng rng(51);
    auto r = relative_walk_equivalence(5, 1000000, rng);
    CHECK(r.illegal == 0);
    CHECK(r.hit_origin == 0);
    CHECK(r.chi.p_value > 1e-3);
    CHECK(r.occupation_tv < 0.02);
}

TEST_CASE("heat kernel decays") {
    TildeGraph g(8);
    auto c = heat_kernel_curve(g, {1, 0}, 50 * 64);
    for (std::size_t t = 1; t < c.m.size(); ++t) CHECK(c.m[t] <= c.m[t - 1] + 1e-15);
    CHECK(c.m.back() < 1e-12);
    CHECK(c.max_mass_error < 1e-12);
    CHECK(c.a_hat > 0);
}

TEST_CASE("singleton sets have boundary ratio one half") {
    TildeGraph g(5);
    for (int v = 0; v < g.size(); ++v) CHECK(boundary_ratio(g, {v}) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("exhaustive conductance at n=4") {
    TildeGraph g(4);
    auto prof = conductance_exhaustive(g);
    CHECK(prof.exact);
    CHECK(prof.c_tilde > 0);
    for (std::size_t i = 1; i < prof.phi.size(); ++i) CHECK(prof.phi[i] <= prof.phi[i - 1] + 1e-15);
    for (std::size_t i = 0; i < prof.r.size(); ++i)
        CHECK(prof.phi[i] * 4 * std::sqrt(prof.r[i]) >= prof.c_tilde - 1e-12);
    Rng rng(52);
    auto heur = conductance_annealed(g, rng);
    CHECK_FALSE(heur.exact);
    REQUIRE(heur.phi.size() == prof.phi.size());
    for (std::size_t i = 0; i < prof.phi.size(); ++i) CHECK(heur.phi[i] == doctest::Approx(prof.phi[i]).epsilon(1e-12));
    CHECK_THROWS_AS(conductance_exhaustive(TildeGraph(5)), std::exception);
}

TEST_CASE("hk2 time makes the uniform bound hold") {
    TildeGraph g(4);
    auto prof = conductance_exhaustive(g);
    const double pi_min = 1.0 / g.size();
    for (double eps : {0.25, 1.0}) {
        auto t = hk2_sufficient_time(prof, pi_min, eps);
        CHECK(uniform_ratio_deviation(g, t) <= eps);
    }
    // doubling the profile quarters the integral
    ConductanceProfile twice = prof;
    for (double& p : twice.phi) p *= 2;
    const double base = double(hk2_sufficient_time(prof, pi_min, 0.5)) - 1;
    const double fast = double(hk2_sufficient_time(twice, pi_min, 0.5)) - 1;
    CHECK(std::abs(fast - base / 4) <= 1.0);
    CHECK(hk2_sufficient_time(prof, pi_min, 4.0 / pi_min) == 1);
}

TEST_CASE("gambler's ruin") {
    CHECK(gambler_ruin_exact(1) == Rational(1));
    CHECK(gambler_ruin_exact(2) == Rational(1, 2));
    for (int k = 1; k <= 30; ++k) CHECK(gambler_ruin_exact(k) == Rational(1, k));
    CHECK(gambler_ruin_strip(7, 200) == doctest::Approx(1.0 / 7).epsilon(1e-12));
    CHECK_THROWS_AS(gambler_ruin_exact(0), std::invalid_argument);
}

TEST_CASE("exit through the sides") {
    auto one = exit_side_exact(1);
    CHECK(one.converged);
    // from (0,y): side with 1/2, up or down with 1/4 each
    CHECK(one.value == doctest::Approx(std::sqrt(3.0) - 1).epsilon(1e-9));
    double last = one.value;
    for (int k = 2; k <= 20; ++k) {
        auto e = exit_side_exact(k);
        CHECK(e.converged);
        CHECK(e.upper - e.lower <= 1e-10);
        CHECK(e.value <= 2.0 / k);
        CHECK(e.value < last);
        last = e.value;
    }
}

TEST_CASE("martingales are flat") {
    Rng rng(53);
    auto m = martingale_check(5, {1, 10, 50, 200}, 20000, rng);
    for (std::size_t i = 0; i < m.times.size(); ++i) {
        CHECK(std::abs(m.mean_y[i] - 1) <= 4 * m.se_y[i] + 1e-12);
        CHECK(std::abs(m.mean_quad[i] - 1) <= 4 * m.se_quad[i] + 1e-12);
    }
}

}
