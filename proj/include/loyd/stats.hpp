#pragma once

#include <cstdint>
#include <vector>

#include "loyd/rng.hpp"

namespace loyd {

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    std::uint64_t count = 0;
};
MeanVar mean_var(const std::vector<double>& xs);

// Two-sided exact binomial p-value for k successes in trials at p = 1/2.
double binomial_two_sided(std::uint64_t k, std::uint64_t trials);

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};
ChiSquare chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs);
// upper tail of the chi-square law
double chi_square_tail(double statistic, int dof);

struct Interval {
    double estimate = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// TV between two samples on a shared Freedman-Diaconis histogram of the pooled
// data, with a percentile bootstrap interval.  All-equal pooled data falls
// back to comparing exact values.
Interval tv_separation(const std::vector<double>& a, const std::vector<double>& b, Rng& rng, int bootstrap = 200,
                       double level = 0.95);

double quantile(std::vector<double> xs, double q);

}  // namespace loyd
