#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "loyd/chains.hpp"
#include "loyd/spectral.hpp"

namespace loyd {

// Puzzle configurations indexed densely; rank is the Lehmer rank of the layout.
class PuzzleStates {
public:
    // every layout (n = 2 or 3), or only the class Omega
    PuzzleStates(int n, bool omega_only);

    int n() const { return n_; }
    int size() const { return static_cast<int>(ranks_.size()); }
    Configuration state(int i) const;
    // -1 when the configuration is not in the set
    int index_of(const Configuration& c) const;
    std::vector<int> indices_where(bool (*pred)(const Configuration&)) const;

private:
    int n_;
    std::vector<std::uint64_t> ranks_;
    std::vector<int> index_;  // rank -> dense index or -1
};

// Walk x -> x played with s, s drawn from the support.  Throws if a move leaves
// the state set.
FiniteChain puzzle_chain(const PuzzleStates& states, const Support& sup);
// OR kernel on Omega from the construction itself: good moves keep going,
// the second bad move stops it.
FiniteChain or_chain_direct(const PuzzleStates& omega, const ChainOptions& opts);

// Walks on S_m, state = position -> label.
using LabelMoves = std::vector<std::pair<Transposition, double>>;
LabelMoves rt_moves(int m, bool holding = true);
LabelMoves hc_label_moves(int m, bool holding = true);
FiniteChain label_chain(int m, const LabelMoves& moves);

// Matrix-free walk on all layouts of the n = 3 puzzle (or n = 2), driven by a
// symmetric distribution over single generators.
class SparseGroupWalk {
public:
    SparseGroupWalk(int n, const Support& sup, int workers = 1);

    std::int64_t size() const { return size_; }
    int start_index() const { return 0; }  // the solved layout has rank 0
    // mu P, using symmetry of the generator law
    void step(const std::vector<double>& in, std::vector<double>& out) const;
    double dirichlet_form(const std::vector<double>& f) const;

private:
    int n_;
    std::int64_t size_;
    int workers_;
    std::vector<double> weights_;
    std::vector<std::int32_t> table_;  // size_ * weights_.size()
};

// Single-start TV curve; the walk is on a group, so every start is equivalent.
MixingResult mixing_time_sparse(const SparseGroupWalk& w, double eps, std::int64_t t_max = 100000);

}  // namespace loyd
