#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loyd/configuration.hpp"
#include "loyd/rng.hpp"
#include "loyd/stats.hpp"

namespace loyd {

// max over n >= 5 of -n^2 log cos(2 pi / n); the maximizer is n = 5
double mu_constant();

struct ExperimentParams {
    int n = 0;
    double mu = 0.0;
    double eps = 0.0;
    double c_user = 1.0;
    std::int64_t t_hat = 0;
    std::int64_t horizon = 0;     // T = (n^2 - 1) t_hat
    int start_shift = 0;          // hole moved right this many steps before t = 0
    std::vector<int> tiles;       // S, by label
    Configuration start = Configuration::solved(2);
};

// Rejects n < 5 unless allow_small; the cosine is <= 0 there.
ExperimentParams choose_parameters(int n, double c_user = 1.0, bool allow_small = false);

double cos_feature(int n, int x);

struct TileTrace {
    int tile = 0;
    std::vector<std::int64_t> times;  // tau_k, hole immediately right of the tile
    std::vector<int> xs;              // x-coordinate of the tile at tau_k
};

struct TracedRun {
    std::vector<TileTrace> traces;  // one per tile of S
    // counts[c][label] = N_{checkpoint c}(label), every tile
    std::vector<std::vector<std::int64_t>> counts;
    std::vector<std::int64_t> checkpoints;
    std::int64_t steps = 0;
    std::uint64_t holds = 0;
    Configuration final_state = Configuration::solved(2);
};

// Lazy Loyd walk from params.start for `horizon` steps.  N_t counts times
// 0..t, so summed over all tiles it is t + 1.
TracedRun run_traced_loyd(const ExperimentParams& p, std::int64_t horizon, Rng& rng,
                          std::vector<std::int64_t> checkpoints = {});

// X increments between consecutive visits, mapped to {-1, 0, 1}
std::vector<int> s_walk_extract(int n, const TileTrace& tr);

double wilson_statistic(const ExperimentParams& p, const Configuration& at_T);
// Sum of f over the tile positions at their t_hat-th visit; empty when some
// trace is too short.
std::optional<double> z_statistic(const ExperimentParams& p, const std::vector<TileTrace>& traces);

// k positions without replacement, summed cos(2 pi x / n)
double reference_statistic(int n, int k, Rng& rng);
double hoeffding_bound(double alpha, int k);  // exp(-2 a^2 / (4k))

struct WalkSymmetry {
    std::uint64_t up = 0, down = 0, hold = 0;
    double p_value = 1.0;
    double slope = 0.0;  // sum f f' / sum f^2
    double slope_se = 0.0;
};
// pooled over the traces given
WalkSymmetry walk_symmetry(int n, const std::vector<TileTrace>& traces);

struct SeedRow {
    std::uint64_t seed = 0;
    double w_dist = 0.0;
    double w_ref = 0.0;
    std::optional<double> z;
    std::int64_t n_total = 0;
};

// Per-seed Wilson runs, seeds split across workers.
std::vector<SeedRow> wilson_experiment(const ExperimentParams& p, const std::vector<std::uint64_t>& seeds, int workers = 1);

struct ConcentrationReport {
    int n = 0;
    std::vector<std::int64_t> checkpoints;
    std::vector<double> mean_dev;   // max over tiles |mean - t/(n^2-1)| per checkpoint
    std::vector<double> max_var;    // max over tiles of var per checkpoint
    double a_hat = 0.0;             // max mean_dev / log t
    double c_hat = 0.0;             // max var n^2 / (t log t)
    bool partition_ok = true;
};

// t must lie in [n^2 log n, n^5].
ConcentrationReport count_concentration(int n, const std::vector<std::int64_t>& checkpoints,
                                        const std::vector<std::uint64_t>& seeds, int workers = 1);

std::vector<std::uint64_t> seed_list(std::uint64_t master, int count);

}  // namespace loyd
