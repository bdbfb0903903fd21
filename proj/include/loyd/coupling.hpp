#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "loyd/rng.hpp"
#include "loyd/torus.hpp"

namespace loyd {

enum class CouplingVariant { horizontal, vertical };

// One row of a coupling table: primary step, secondary step, probability.
// A zero step means the hole stays put.
struct CoupledMove {
    Point primary;
    Point secondary;
    double prob;
};

// Joint step laws.  `adjacent` is used when secondary - primary == e, `apart`
// for every other uncoupled pair.
std::vector<CoupledMove> adjacent_table(Point e);
std::vector<CoupledMove> apart_table(Point e);

// Two lazy hole walks on the n x n torus.  Secondary starts at primary + e,
// primary starts d columns right of column C.
class CoupledHoles {
public:
    CoupledHoles(int n, int column, int d, CouplingVariant variant);

    Point primary() const { return h_; }
    Point secondary() const { return s_; }
    bool coupled() const { return h_ == s_; }
    // either hole in column C - 1, C or C + 1
    bool in_band() const;
    // returns the (primary, secondary) steps taken
    std::pair<Point, Point> step(Rng& rng);

private:
    Torus t_;
    int column_;
    Point e_;
    Point h_, s_;
    std::vector<CoupledMove> adjacent_, apart_;
};

struct CouplingOutcome {
    bool event_e = false;  // band reached before coupling
    std::int64_t steps = 0;
    std::vector<Point> primary_path, secondary_path;  // only when recorded
};

CouplingOutcome coupled_holes(int n, int column, int d, CouplingVariant variant, Rng& rng, bool record = false,
                              std::int64_t cap = 100'000'000);

// index in (up, down, left, right, hold)
int step_category(Point s);

struct MarginalCounts {
    std::array<std::uint64_t, 5> primary{};
    std::array<std::uint64_t, 5> secondary{};
};

// Runs `steps` coupled steps, restarting at a fresh offset after coupling.
MarginalCounts coupling_marginals(int n, CouplingVariant variant, std::int64_t steps, Rng& rng);

}  // namespace loyd
