#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loyd/coupling.hpp"
#include "loyd/lower_bound.hpp"
#include "loyd/rng.hpp"
#include "loyd/stats.hpp"

using namespace loyd;

TEST_SUITE("lower_bound") {

TEST_CASE("mu is attained at n=5") {
    const double at5 = -25.0 * std::log(std::cos(2 * std::numbers::pi / 5));
    CHECK(mu_constant() == doctest::Approx(at5).epsilon(1e-14));
    CHECK(mu_constant() > 2 * std::numbers::pi * std::numbers::pi);
}

TEST_CASE("parameters") {
    auto p = choose_parameters(8);
    CHECK(p.eps * p.mu == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(p.t_hat == static_cast<std::int64_t>(std::floor(1 + p.eps * 64 * std::log(8.0))));
    CHECK(p.horizon == 63 * p.t_hat);
    CHECK(p.start.hole() == Point{4, 0});
    for (int s : p.tiles) CHECK(cos_feature(8, Torus(8).point(p.start.position_of(s)).x) > 0.5);
    auto big = choose_parameters(8, 64);
    CHECK(big.t_hat == 64);
    CHECK_THROWS_AS(choose_parameters(4), std::invalid_argument);
    CHECK_NOTHROW(choose_parameters(4, 1, true));
}

TEST_CASE("no tile of S starts next to the hole") {
    for (int n : {5, 6, 8, 10}) {
        auto p = choose_parameters(n);
        Torus t(n);
        for (int s : p.tiles) {
            Point d = t.sub(t.point(p.start.position_of(s)), p.start.hole());
            CHECK(t.l1(d) > 1);
        }
    }
}

TEST_CASE("partition identity and monotone counts") {
    auto p = choose_parameters(5, 100);
    Rng rng(41);
    auto run = run_traced_loyd(p, 20000, rng, {0, 100, 1000, 20000});
    REQUIRE(run.counts.size() == 4);
    for (std::size_t c = 0; c < 4; ++c) {
        std::int64_t total = 0;
        for (auto v : run.counts[c]) total += v;
        CHECK(total == run.checkpoints[c] + 1);
        if (c > 0)
            for (std::size_t s = 0; s < run.counts[c].size(); ++s) CHECK(run.counts[c][s] >= run.counts[c - 1][s]);
    }
    for (const auto& tr : run.traces) {
        CHECK(std::is_sorted(tr.times.begin(), tr.times.end()));
        CHECK(std::adjacent_find(tr.times.begin(), tr.times.end()) == tr.times.end());
        CHECK(tr.xs.size() == tr.times.size());
    }
}

TEST_CASE("s walk steps and symmetry") {
    auto p = choose_parameters(5, 1000);
    std::vector<TileTrace> pooled;
    for (std::uint64_t seed : seed_list(7, 5)) {
        Rng rng(seed);
        auto run = run_traced_loyd(p, 100000, rng);
        for (auto& tr : run.traces) {
            for (int v : s_walk_extract(5, tr)) CHECK((v >= -1 && v <= 1));
            pooled.push_back(tr);
        }
    }
    auto sym = walk_symmetry(5, pooled);
    CHECK(sym.p_value > 1e-3);
    CHECK(sym.hold > 0);
    CHECK(sym.slope >= std::cos(2 * std::numbers::pi / 5) - 3 * sym.slope_se);
}

TEST_CASE("s walk extract rejects jumps") {
    TileTrace tr;
    tr.times = {1, 5};
    tr.xs = {0, 2};
    CHECK_THROWS_AS(s_walk_extract(8, tr), std::logic_error);
    TileTrace one;
    one.times = {3};
    one.xs = {1};
    CHECK(s_walk_extract(8, one).empty());
}

TEST_CASE("wilson statistic bounds") {
    auto p = choose_parameters(8);
    const double at0 = wilson_statistic(p, p.start);
    CHECK(at0 >= p.tiles.size() / 2.0);
    Rng rng(42);
    auto run = run_traced_loyd(p, p.horizon, rng);
    const double w = wilson_statistic(p, run.final_state);
    CHECK(std::abs(w) <= double(p.tiles.size()));
    // recomputable from the serialized final configuration alone
    CHECK(wilson_statistic(p, Configuration::from_json(run.final_state.to_json())) == w);
}

TEST_CASE("reference statistic") {
    Rng rng(43);
    CHECK(std::abs(reference_statistic(6, 36, rng)) < 1e-12);
    CHECK_THROWS_AS(reference_statistic(6, 37, rng), std::invalid_argument);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) xs.push_back(reference_statistic(8, 24, rng));
    auto mv = mean_var(xs);
    CHECK(std::abs(mv.mean) <= 3 * std::sqrt(mv.variance / 10000));
    const int k = 24;
    for (double a : {std::sqrt(double(k)), 2 * std::sqrt(double(k))}) {
        double tail = std::count_if(xs.begin(), xs.end(), [&](double w) { return w >= a; }) / 10000.0;
        CHECK(tail <= hoeffding_bound(a, k));
    }
}

TEST_CASE("tv separation") {
    Rng rng(44);
    std::vector<double> a, b, far;
    for (int i = 0; i < 400; ++i) {
        a.push_back(rng.uniform());
        b.push_back(rng.uniform());
        far.push_back(5 + rng.uniform());
    }
    CHECK(tv_separation(a, a, rng).estimate == doctest::Approx(0.0));
    CHECK(tv_separation(a, b, rng).estimate < 0.25);
    auto d = tv_separation(a, far, rng);
    CHECK(d.estimate == doctest::Approx(1.0));
    std::vector<double> c1(300, 1.0), c2(300, 2.0);
    CHECK(tv_separation(c1, c2, rng).estimate == doctest::Approx(1.0));
    CHECK(tv_separation(c1, c1, rng).estimate == doctest::Approx(0.0));
}

TEST_CASE("statistics helpers") {
    CHECK(binomial_two_sided(5, 10) == doctest::Approx(1.0));
    CHECK(binomial_two_sided(0, 10) == doctest::Approx(2.0 / 1024).epsilon(1e-12));
    auto chi = chi_square({50, 50}, {0.5, 0.5});
    CHECK(chi.statistic == 0.0);
    CHECK(chi.dof == 1);
    CHECK(chi_square_tail(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(quantile({1, 2, 3, 4, 5}, 0.5) == 3.0);
}

TEST_CASE("count concentration window") {
    CHECK_THROWS_AS(count_concentration(5, {10}, seed_list(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(count_concentration(5, {4000}, seed_list(1, 5)), std::invalid_argument);
    auto r = count_concentration(5, {100, 1000, 3125}, seed_list(1, 20));
    CHECK(r.partition_ok);
    CHECK(r.mean_dev.size() == 3);
    for (double v : r.max_var) CHECK(v > 0);
}

TEST_CASE("wilson experiment is reproducible across worker counts") {
    auto p = choose_parameters(6, 4);
    auto seeds = seed_list(9, 8);
    auto one = wilson_experiment(p, seeds, 1);
    auto two = wilson_experiment(p, seeds, 2);
    REQUIRE(one.size() == two.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].w_dist == two[i].w_dist);
        CHECK(one[i].w_ref == two[i].w_ref);
        CHECK(one[i].n_total <= p.horizon + 1);
        CHECK(one[i].n_total == two[i].n_total);
    }
}

TEST_CASE("coupling tables sum to one") {
    for (Point e : {Point{1, 0}, Point{0, -1}}) {
        for (const auto& table : {adjacent_table(e), apart_table(e)}) {
            double total = 0.0;
            for (const auto& row : table) total += row.prob;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("coupled holes stay together") {
    Rng rng(45);
    for (auto variant : {CouplingVariant::horizontal, CouplingVariant::vertical}) {
        for (int trial = 0; trial < 200; ++trial) {
            CoupledHoles c(32, 4, 6, variant);
            for (int i = 0; i < 2000 && !c.in_band(); ++i) {
                bool was = c.coupled();
                c.step(rng);
                if (was) CHECK(c.coupled());
            }
        }
    }
    CHECK_THROWS_AS(CoupledHoles(8, 0, 6, CouplingVariant::horizontal), std::invalid_argument);
}

TEST_CASE("coupled hole marginals follow the lazy step law") {
    Rng rng(46);
    for (auto variant : {CouplingVariant::horizontal, CouplingVariant::vertical}) {
        auto m = coupling_marginals(32, variant, 200000, rng);
        std::vector<double> law = {0.125, 0.125, 0.125, 0.125, 0.5};
        auto a = chi_square({m.primary.begin(), m.primary.end()}, law);
        auto b = chi_square({m.secondary.begin(), m.secondary.end()}, law);
        CHECK(a.p_value > 1e-3);
        CHECK(b.p_value > 1e-3);
    }
}

TEST_CASE("step categories") {
    CHECK(step_category({0, 1}) == 0);
    CHECK(step_category({0, -1}) == 1);
    CHECK(step_category({-1, 0}) == 2);
    CHECK(step_category({1, 0}) == 3);
    CHECK(step_category({0, 0}) == 4);
}

}
