#include "loyd/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace loyd {

namespace {

Point perp(Point e) { return {-e.y, e.x}; }
Point neg(Point p) { return {-p.x, -p.y}; }

void check_table(const std::vector<CoupledMove>& t) {
    double s = 0.0;
    for (const auto& m : t) s += m.prob;
    if (std::abs(s - 1.0) > 1e-15) throw std::logic_error("coupling table does not sum to 1");
}

}  // namespace

std::vector<CoupledMove> adjacent_table(Point e) {
    const Point u = perp(e), z{0, 0};
    std::vector<CoupledMove> t = {
        {neg(e), e, 0.125},      // step apart
        {e, z, 0.125},           // primary onto secondary
        {u, u, 0.125},
        {neg(u), neg(u), 0.125},
        {z, neg(e), 0.125},      // secondary onto primary
        {z, z, 0.375},
    };
    check_table(t);
    return t;
}

std::vector<CoupledMove> apart_table(Point e) {
    const Point u = perp(e), z{0, 0};
    std::vector<CoupledMove> t = {
        {neg(e), e, 0.125}, {e, neg(e), 0.125}, {u, u, 0.125}, {neg(u), neg(u), 0.125}, {z, z, 0.5},
    };
    check_table(t);
    return t;
}

CoupledHoles::CoupledHoles(int n, int column, int d, CouplingVariant variant) : t_(n), column_(t_.wrap(column)) {
    if (d < 1) throw std::invalid_argument("distance d must be >= 1");
    if (d + 3 >= n) throw std::invalid_argument("torus too small for distance " + std::to_string(d));
    e_ = variant == CouplingVariant::horizontal ? Point{1, 0} : Point{0, -1};
    h_ = t_.wrap(Point{column_ + d, n / 2});
    s_ = t_.add(h_, e_);
    adjacent_ = adjacent_table(e_);
    apart_ = apart_table(e_);
}

bool CoupledHoles::in_band() const {
    auto near = [&](Point p) { return t_.abs(p.x - column_) <= 1; };
    return near(h_) || near(s_);
}

std::pair<Point, Point> CoupledHoles::step(Rng& rng) {
    auto lazy = [&] {
        if (rng.coin()) return Point{0, 0};
        return loyd::step(all_directions[rng.below(4)]);
    };
    Point a, b;
    if (coupled()) {
        a = b = lazy();
    } else if (in_band()) {
        a = lazy();
        b = lazy();
    } else {
        const auto& table = t_.sub(s_, h_) == t_.wrap(e_) ? adjacent_ : apart_;
        // probabilities are multiples of 1/8
        int r = rng.below(8);
        std::size_t i = 0;
        for (;; ++i) {
            r -= static_cast<int>(std::lround(table[i].prob * 8));
            if (r < 0) break;
        }
        a = table[i].primary;
        b = table[i].secondary;
    }
    h_ = t_.add(h_, a);
    s_ = t_.add(s_, b);
    return {a, b};
}

CouplingOutcome coupled_holes(int n, int column, int d, CouplingVariant variant, Rng& rng, bool record,
                              std::int64_t cap) {
    CoupledHoles ch(n, column, d, variant);
    CouplingOutcome out;
    auto log = [&] {
        if (!record) return;
        out.primary_path.push_back(ch.primary());
        out.secondary_path.push_back(ch.secondary());
    };
    log();
    while (true) {
        if (ch.coupled()) return out;
        if (ch.in_band()) {
            out.event_e = true;
            return out;
        }
        if (out.steps >= cap) throw std::runtime_error("coupling run exceeded step cap");
        ch.step(rng);
        ++out.steps;
        log();
    }
}

int step_category(Point s) {
    if (s == Point{0, 1}) return 0;
    if (s == Point{0, -1}) return 1;
    if (s == Point{-1, 0}) return 2;
    if (s == Point{1, 0}) return 3;
    if (s == Point{0, 0}) return 4;
    throw std::invalid_argument("not a single hole step");
}

MarginalCounts coupling_marginals(int n, CouplingVariant variant, std::int64_t steps, Rng& rng) {
    MarginalCounts m;
    const int max_d = std::max(1, std::min(16, n - 4));
    CoupledHoles ch(n, 0, 1 + rng.below(max_d), variant);
    for (std::int64_t i = 0; i < steps; ++i) {
        if (ch.coupled()) ch = CoupledHoles(n, 0, 1 + rng.below(max_d), variant);
        auto [a, b] = ch.step(rng);
        ++m.primary[static_cast<std::size_t>(step_category(a))];
        ++m.secondary[static_cast<std::size_t>(step_category(b))];
    }
    return m;
}

}  // namespace loyd
