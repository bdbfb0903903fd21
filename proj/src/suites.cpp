#include "loyd/suites.hpp"

#include <algorithm>
#include <cmath>

#include "loyd/comparison.hpp"
#include "loyd/group_chains.hpp"

namespace loyd {

std::vector<LayerPair> n2_layer_pairs(const ChainOptions& opts) {
    PuzzleStates omega(2, true);
    auto chain = [&](ChainTag t) { return puzzle_chain(omega, MoveDistribution(t, 2, opts).support()); };
    FiniteChain bgb = chain(ChainTag::bgb), pc = chain(ChainTag::pc), nl = chain(ChainTag::nl), ly = chain(ChainTag::loyd);
    std::vector<LayerPair> out;
    out.push_back({"rt-hc", 2, label_chain(4, rt_moves(4, opts.holding)), label_chain(4, hc_label_moves(4, opts.holding)),
                   compare_rt_hc(2, opts.holding).A});
    out.push_back({"or-bgb", 2, or_chain_direct(omega, opts), bgb, compare_or_bgb_series(2, opts).A});
    out.push_back({"bgb-pc", 2, bgb, pc, compare_bgb_pc(2, opts.holding).A});
    out.push_back({"pc-nl", 2, pc, nl, compare_deterministic("pc-nl", 2, opts.holding).A});
    out.push_back({"nl-loyd", 2, nl, ly, compare_deterministic("nl-loyd", 2, opts.holding).A});
    return out;
}

GtCheck gt_check(const LayerPair& p, int functions, Rng& rng) {
    GtCheck r{p.layer, p.n, p.A, functions};
    for (int i = 0; i < functions; ++i) {
        Vector f(p.source.size());
        for (auto& v : f) v = 2.0 * rng.uniform() - 1.0;
        const double es = dirichlet_form(p.source, f), et = dirichlet_form(p.target, f);
        r.worst_ratio = std::max(r.worst_ratio, es / (p.A * et));
        if (es > p.A * et * (1.0 + 1e-9)) ++r.violations;
    }
    return r;
}

GtCheck gt_check_hc_loyd(int functions, Rng& rng, int workers) {
    ChainOptions opts;
    SparseGroupWalk hc(3, MoveDistribution(ChainTag::hc, 3, opts).support(), workers);
    SparseGroupWalk ly(3, MoveDistribution(ChainTag::loyd, 3, opts).support(), workers);
    GtCheck r{"hc-loyd", 3, compare_deterministic("hc-loyd", 3).A, functions};
    std::vector<double> f(static_cast<std::size_t>(hc.size()));
    for (int i = 0; i < functions; ++i) {
        for (auto& v : f) v = 2.0 * rng.uniform() - 1.0;
        const double es = hc.dirichlet_form(f), et = ly.dirichlet_form(f);
        r.worst_ratio = std::max(r.worst_ratio, es / (r.A * et));
        if (es > r.A * et * (1.0 + 1e-9)) ++r.violations;
    }
    return r;
}

LscompCheck lscomp_check(const LayerPair& p, Rng& rng) {
    LscompCheck r;
    r.layer = p.layer;
    r.A = p.A;
    r.alpha_source = log_sobolev_estimate(p.source, rng).alpha_estimate;
    r.alpha_target = log_sobolev_estimate(p.target, rng).alpha_estimate;
    r.ok = r.alpha_source <= r.A * r.alpha_target + 3 * alpha_tolerance;
    return r;
}

HcorCheck hcor_check(Rng& rng) {
    PuzzleStates omega(2, true), all(2, false);
    ChainOptions opts;  // lazy HC, holds counted inside the construction
    FiniteChain hc = puzzle_chain(all, MoveDistribution(ChainTag::hc, 2, opts).support());
    std::vector<int> keep;
    for (int i = 0; i < omega.size(); ++i) keep.push_back(all.index_of(omega.state(i)));
    // restrict_chain sorts; omega's order follows rank, as does all's
    FiniteChain restricted = restrict_chain(hc, keep);
    FiniteChain direct = or_chain_direct(omega, opts);
    HcorCheck r;
    r.kernel_difference = (restricted.kernel() - direct.kernel()).cwiseAbs().maxCoeff();
    r.alpha_or = log_sobolev_estimate(direct, rng).alpha_estimate;
    r.alpha_hc = log_sobolev_estimate(hc, rng).alpha_estimate;
    r.ok = r.kernel_difference <= 1e-10 && r.alpha_or >= 0.5 * r.alpha_hc - 2 * alpha_tolerance;
    return r;
}

SmallMixing loyd_n2_mixing(Rng& rng) {
    PuzzleStates omega(2, true);
    FiniteChain ly = puzzle_chain(omega, MoveDistribution(ChainTag::loyd, 2).support());
    SmallMixing r;
    const double eps = std::exp(-1.0);
    auto dense = mixing_time_exact(ly, eps);
    r.dense_t = dense.t;
    r.curve = dense.curve;
    r.group_t = mixing_time_group_walk(ly, omega.index_of(Configuration::solved(2)), eps).t;
    r.alpha = log_sobolev_estimate(ly, rng).alpha_estimate;
    r.bound = logsob_mixing_bound(r.alpha, static_cast<double>(ly.size()));
    return r;
}

}  // namespace loyd
