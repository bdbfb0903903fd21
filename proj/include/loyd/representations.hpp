#pragma once

#include <string>
#include <vector>

#include "loyd/chains.hpp"
#include "loyd/group.hpp"
#include "loyd/rng.hpp"

namespace loyd {

enum class Layer { rt_hc, or_bgb, bgb_pc, pc_nl, nl_loyd, hc_loyd };

std::string to_string(Layer l);
Layer layer_from_string(const std::string& s);
ChainTag source_chain(Layer l);
ChainTag target_chain(Layer l);

// A source move written as a sequence of target generators.  Each factor is
// one generator of the target chain (a single point for PC/NL/Loyd, a whole
// bad/good/bad string for BGB).
struct Representation {
    int n = 2;
    std::vector<MoveString> factors;

    std::size_t length() const { return factors.size(); }
};

MoveString flatten(const Representation& r);
Representation singletons(int n, const std::vector<Point>& moves);

// --- random transpositions by hole swaps ------------------------------------
// Labels 0..m-1, the hole is label 0 and sorts first: (i,j) -> (h,i)(h,j)(h,i)
// for i<j, which for i = h is (h,h)(h,j)(h,h) with (h,h) the holding move.
// Without holding a hole transposition is its own single generator.
LabelString represent_rt_via_hc(int m, Transposition t, bool holding = true);

// --- OR -> BGB -----------------------------------------------------------------
enum class OrForm { good, bad_bad, bad_goods_bad };
OrForm or_form(int n, const MoveString& or_move);
// b1 g1 .. gk b2 -> (b1 g1 B1)(-B1 g2 B2)..(-B(k-1) gk b2), fresh bad B's
Representation represent_or_via_bgb(const MoveString& or_move, const MoveDistribution& bgb, Rng& rng);

// --- BGB -> PC -----------------------------------------------------------------
// e1 o e2 -> (e1+o)(-o)(o+e2)(-e1-o-e2)(e1+o)(-o)(o+e2)
std::vector<Point> expand_even_odd_even(int n, Point e1, Point o, Point e2);
// b1 b2 -> (b1 G B)(-B -G b2) with G uniform odd and B uniform bad, each expanded
Representation represent_bgb_via_pc(const MoveString& bgb_move, const MoveDistribution& bgb, Rng& rng);
// same with the auxiliary draws supplied
Representation represent_bgb_via_pc(const MoveString& bgb_move, Point aux_odd, Point aux_bad);

// --- PC -> NL, NL -> Loyd, HC -> Loyd -------------------------------------------
// Any y with a ladder embedding (odd y for even n; every nonzero y for odd n).
const std::vector<Point>& represent_pc_via_nl(int n, Point y);
// y at torus L1 distance 1 or 3, solved inside a 3x3 (or 4x2 for straight
// distance 3) block
const std::vector<Point>& represent_nl_via_loyd(int n, Point y);
// n odd
std::vector<Point> represent_hc_via_loyd(int n, Point y);
// n even, composed PC -> NL -> Loyd
std::vector<Point> represent_pc_via_loyd(int n, Point y);

// Draw a source move for the layer and represent it.  Returns false (with a
// message) when the evaluation does not match.
struct LayerSample {
    std::string source;
    std::string target;
    std::size_t length = 0;
    bool ok = true;
};
LayerSample sample_and_check(Layer layer, int n, Rng& rng, const ChainOptions& opts = {});

}  // namespace loyd
