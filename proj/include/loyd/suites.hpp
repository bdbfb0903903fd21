#pragma once

#include <string>
#include <vector>

#include "loyd/chains.hpp"
#include "loyd/rng.hpp"
#include "loyd/spectral.hpp"

namespace loyd {

// Source and target chain of one representation layer on a common state
// space, with the layer's comparison constant.
struct LayerPair {
    std::string layer;
    int n = 2;
    FiniteChain source;
    FiniteChain target;
    double A = 0.0;
};

// rt-hc on S_4, the rest on Omega of the 2x2 puzzle
std::vector<LayerPair> n2_layer_pairs(const ChainOptions& opts = {});

struct GtCheck {
    std::string layer;
    int n = 0;
    double A = 0.0;
    int functions = 0;
    int violations = 0;
    double worst_ratio = 0.0;  // max source E / (A target E)
};
// source form <= A target form for random functions, 1e-9 relative
GtCheck gt_check(const LayerPair& p, int functions, Rng& rng);
// hc-loyd needs odd n; checked on the 3x3 puzzle, matrix-free
GtCheck gt_check_hc_loyd(int functions, Rng& rng, int workers = 1);

inline constexpr double alpha_tolerance = 1e-6;

struct LscompCheck {
    std::string layer;
    double A = 0.0;
    double alpha_source = 0.0;
    double alpha_target = 0.0;
    bool ok = false;  // alpha_source <= A alpha_target + 3 tol
};
LscompCheck lscomp_check(const LayerPair& p, Rng& rng);

struct HcorCheck {
    double alpha_or = 0.0;
    double alpha_hc = 0.0;
    double kernel_difference = 0.0;  // restriction vs direct construction
    bool ok = false;                 // alpha_or >= alpha_hc / 2 - 2 tol and kernels agree to 1e-10
};
HcorCheck hcor_check(Rng& rng);

struct SmallMixing {
    std::int64_t dense_t = -1;  // all starts
    std::int64_t group_t = -1;  // single start
    double alpha = 0.0;
    double bound = 0.0;         // (4 + log log 12) / (4 alpha)
    std::vector<double> curve;
};
SmallMixing loyd_n2_mixing(Rng& rng);

}  // namespace loyd
