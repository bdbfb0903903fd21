#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "loyd/rng.hpp"

namespace loyd {

using Rational = boost::rational<std::int64_t>;

// Simple random walk on Z^2 from (0,1): P(reach y = k before y = 0).
// Exact 1-D harmonic solve in rationals.
Rational gambler_ruin_exact(int k);
// Same probability from a 2-D absorbing solve on a periodic strip of the
// given width.
double gambler_ruin_strip(int k, int width);

struct ExitSide {
    double lower = 0.0;  // side before bottom, ceiling counted as failure
    double upper = 0.0;  // lower + P(ceiling first)
    double value = 0.0;  // midpoint
    int ceiling = 0;
    bool converged = false;
};
// P(reach |x| = k before y = 0) from (0,1), bracketed to `tol`.
ExitSide exit_side_exact(int k, double tol = 1e-10);

struct MartingaleCheck {
    std::vector<std::int64_t> times;
    std::vector<double> mean_y, se_y;          // E Y_{t ^ T}, start value 1
    std::vector<double> mean_quad, se_quad;    // E (Y^2 - X^2)_{t ^ T}, start value 1
};
// walks stopped on leaving {|x| < k, y > 0}
MartingaleCheck martingale_check(int k, const std::vector<std::int64_t>& times, int walks, Rng& rng);

}  // namespace loyd
