#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "loyd/rng.hpp"

namespace loyd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class FiniteChain {
public:
    // Checks rows sum to 1 (1e-12), pi P = pi (1e-10) and, when asked,
    // detailed balance (1e-12).
    FiniteChain(Matrix kernel, Vector stationary, bool reversible = true);
    // Solves for the stationary vector.
    static FiniteChain from_kernel(Matrix kernel, bool reversible = true);

    int size() const { return static_cast<int>(p_.rows()); }
    const Matrix& kernel() const { return p_; }
    const Vector& stationary() const { return pi_; }
    bool reversible() const { return reversible_; }

private:
    Matrix p_;
    Vector pi_;
    bool reversible_;
};

Vector stationary_of(const Matrix& kernel);

// 1/2 sum pi(x) p(x,y) (f(x)-f(y))^2
double dirichlet_form(const FiniteChain& c, const Vector& f);
// sum pi g log(g / E g), 0 log 0 = 0
double entropy_functional(const Vector& pi, const Vector& g);
double variance(const Vector& pi, const Vector& f);

// 1 - second largest eigenvalue of the symmetrized kernel
double spectral_gap(const FiniteChain& c);

struct SpectralReport {
    double gap = 0.0;
    double alpha_estimate = 0.0;  // best ratio found: an upper bound on alpha
    std::string alpha_method = "random-restarts";
    int restarts = 0;
    double functional_value = 0.0;
    Vector argmin;
    bool converged = false;
};

double log_sobolev_ratio(const FiniteChain& c, const Vector& f);
SpectralReport log_sobolev_estimate(const FiniteChain& c, Rng& rng, int restarts = 64, double tol = 1e-10);

// The chain watched only on `keep` (sorted state indices), by eliminating the rest.
FiniteChain restrict_chain(const FiniteChain& c, const std::vector<int>& keep);
// f on keep, extended harmonically to every state
Vector harmonic_extension(const FiniteChain& c, const std::vector<int>& keep, const Vector& f_keep);

double tv_distance(const Vector& mu, const Vector& nu);

struct MixingResult {
    std::int64_t t = -1;          // first t with max TV <= eps, -1 when not reached
    std::vector<double> curve;    // curve[t] = max over starts of TV at time t
    bool converged = false;
};

// Dense powers from every start.
MixingResult mixing_time_exact(const FiniteChain& c, double eps, std::int64_t t_max = 100000);
// Single start; valid for walks on a group, where every start is equivalent.
MixingResult mixing_time_group_walk(const FiniteChain& c, int start, double eps, std::int64_t t_max = 100000);

// (4 + log log |S|) / (4 alpha)
double logsob_mixing_bound(double alpha, double state_count);

struct FflemmaReport {
    int trials = 0;
    int violations = 0;
    double worst_margin = 0.0;  // min over trials of restricted - original
    std::string counterexample;  // JSON, empty when none
};

// Random reversible chains on connected weighted graphs of at most 12 states.
FflemmaReport verify_fflemma(int trials, Rng& rng);
// connected random weighted graph, lazy walk weighted by degree
FiniteChain random_reversible_chain(int states, Rng& rng);

}  // namespace loyd
