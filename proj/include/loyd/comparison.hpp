#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "loyd/chains.hpp"
#include "loyd/representations.hpp"
#include "loyd/rng.hpp"

namespace loyd {

// A = max_z (1/p(z)) E[N(Y,z) |Y|], z over target generators.
struct ComparisonReport {
    std::string layer;
    int n = 0;
    double A = 0.0;
    std::string argmax;
    std::map<std::string, double> per_generator;  // A(z), or A per class for Monte Carlo
    std::map<std::string, double> std_error;      // Monte Carlo only
    std::string method;                           // exact-enumeration | exact-series | monte-carlo
    std::uint64_t samples = 0;
    bool low_confidence = false;
};

std::string to_json(const ComparisonReport& r);

// Exact, all transpositions of n^2 labels.
ComparisonReport compare_rt_hc(int n, bool holding = true);

// OR -> BGB, exact by summing the geometric series of the inner length per
// generator class.
ComparisonReport compare_or_bgb_series(int n, const ChainOptions& opts);
// Monte Carlo estimate with classes of interchangeable generators pooled.
ComparisonReport compare_or_bgb_monte_carlo(int n, const ChainOptions& opts, std::uint64_t samples, Rng& rng);

// Exact over every source move and every auxiliary draw.
ComparisonReport compare_bgb_pc(int n, bool holding = true);

// Deterministic single-generator layers: pc-nl, nl-loyd, hc-loyd (n odd) and
// the composed pc-loyd (n even, layer tag "pc-loyd").
ComparisonReport compare_deterministic(const std::string& layer, int n, bool holding = true);

}  // namespace loyd
