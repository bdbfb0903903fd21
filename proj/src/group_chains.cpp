#include "loyd/group_chains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <Eigen/LU>

#include "loyd/permutation.hpp"

namespace loyd {

namespace {

void check_small(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("dense puzzle state spaces need n = 2 or 3, got " + std::to_string(n));
}

Configuration play_key(Configuration c, int n, const StringKey& k) {
    Torus t(n);
    for (int z : k) c.translate_hole(t.point(z));
    return c;
}

}  // namespace

PuzzleStates::PuzzleStates(int n, bool omega_only) : n_(n) {
    check_small(n);
    const std::uint64_t total = factorial(n * n);
    if (n == 3 && omega_only) throw std::invalid_argument("Omega is only defined here for even n");
    index_.assign(total, -1);
    for (std::uint64_t r = 0; r < total; ++r) {
        if (omega_only) {
            auto c = Configuration::from_layout(n, unrank_permutation(r, n * n));
            if (!c.in_omega()) continue;
        }
        index_[r] = static_cast<int>(ranks_.size());
        ranks_.push_back(r);
    }
}

Configuration PuzzleStates::state(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("state index out of range");
    return Configuration::from_layout(n_, unrank_permutation(ranks_[i], n_ * n_));
}

int PuzzleStates::index_of(const Configuration& c) const {
    if (c.n() != n_) throw std::invalid_argument("configuration size mismatch");
    return index_[rank_permutation(c.layout())];
}

std::vector<int> PuzzleStates::indices_where(bool (*pred)(const Configuration&)) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (pred(state(i))) out.push_back(i);
    return out;
}

FiniteChain puzzle_chain(const PuzzleStates& states, const Support& sup) {
    const int k = states.size();
    Matrix p = Matrix::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        const Configuration x = states.state(i);
        for (const auto& [key, prob] : sup) {
            int j = states.index_of(play_key(x, states.n(), key));
            if (j < 0) throw std::invalid_argument("move string leaves the state set");
            p(i, j) += prob;
        }
    }
    Vector pi = Vector::Constant(k, 1.0 / k);
    return FiniteChain(std::move(p), std::move(pi), is_symmetric(sup, states.n()));
}

FiniteChain or_chain_direct(const PuzzleStates& omega, const ChainOptions& opts) {
    const int n = omega.n();
    if (n % 2 != 0) throw std::invalid_argument("OR needs even n");
    PuzzleStates all(n, false);
    const int k = all.size();
    // one inner HC step split by move class
    const bool inner_lazy = opts.holding && opts.or_holding == OrHolding::counted;
    const auto moves = nonzero_points(n);
    const double each = (inner_lazy ? 0.5 : 1.0) / static_cast<double>(moves.size());
    Matrix good = Matrix::Zero(k, k), bad = Matrix::Zero(k, k);
    Torus t(n);
    for (int i = 0; i < k; ++i) {
        const Configuration x = all.state(i);
        if (inner_lazy) good(i, i) += 0.5;
        for (Point y : moves) {
            int j = all.index_of(play_key(x, n, {t.index(y)}));
            (classify_move(n, y) == MoveClass::bad ? bad : good)(i, j) += each;
        }
    }
    // stop on a good first step, or after the second bad one
    Matrix inner = Matrix::Identity(k, k) - good;
    Matrix full = good + bad * Eigen::FullPivLU<Matrix>(inner).solve(bad);
    if (opts.holding && opts.or_holding == OrHolding::skipped)
        full = 0.5 * Matrix::Identity(k, k) + 0.5 * full;

    const int m = omega.size();
    Matrix p(m, m);
    std::vector<int> to_all(m);
    for (int i = 0; i < m; ++i) to_all[i] = all.index_of(omega.state(i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) p(i, j) = full(to_all[i], to_all[j]);
    for (int i = 0; i < m; ++i) {
        if (std::abs(p.row(i).sum() - 1.0) > 1e-12) throw std::logic_error("OR kernel leaks out of Omega");
        p.row(i) /= p.row(i).sum();
    }
    return FiniteChain(std::move(p), Vector::Constant(m, 1.0 / m), true);
}

LabelMoves rt_moves(int m, bool holding) {
    if (m < 2) throw std::invalid_argument("need at least 2 labels");
    LabelMoves out;
    const double move = holding ? 0.5 : 1.0;
    if (holding) out.push_back({{0, 0}, 0.5});
    const double each = move / (0.5 * m * (m - 1));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) out.push_back({{a, b}, each});
    return out;
}

LabelMoves hc_label_moves(int m, bool holding) {
    if (m < 2) throw std::invalid_argument("need at least 2 labels");
    LabelMoves out;
    const double move = holding ? 0.5 : 1.0;
    if (holding) out.push_back({{0, 0}, 0.5});
    for (int b = 1; b < m; ++b) out.push_back({{0, b}, move / (m - 1)});
    return out;
}

FiniteChain label_chain(int m, const LabelMoves& moves) {
    if (m > 7) throw std::invalid_argument("label chain too large for dense work");
    const auto k = static_cast<Eigen::Index>(factorial(m));
    Matrix p = Matrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto at = unrank_permutation(static_cast<std::uint64_t>(i), m);
        for (const auto& [tr, prob] : moves) {
            auto next = at;
            for (int& v : next) {
                if (v == tr.a) v = tr.b;
                else if (v == tr.b) v = tr.a;
            }
            p(i, static_cast<Eigen::Index>(rank_permutation(next))) += prob;
        }
    }
    return FiniteChain(std::move(p), Vector::Constant(k, 1.0 / static_cast<double>(k)), true);
}

SparseGroupWalk::SparseGroupWalk(int n, const Support& sup, int workers)
    : n_(n), size_(static_cast<std::int64_t>(factorial(n * n))), workers_(std::max(1, workers)) {
    check_small(n);
    if (!is_symmetric(sup, n)) throw std::invalid_argument("matrix-free walk needs a symmetric generator law");
    std::vector<Point> gens;
    Torus t(n);
    for (const auto& [key, prob] : sup) {
        if (key.size() != 1) throw std::invalid_argument("matrix-free walk takes single generators only");
        gens.push_back(t.point(key[0]));
        weights_.push_back(prob);
    }
    const std::size_t g = gens.size();
    table_.assign(static_cast<std::size_t>(size_) * g, 0);
    auto fill = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            const auto base = Configuration::from_layout(n, unrank_permutation(static_cast<std::uint64_t>(r), n * n));
            for (std::size_t j = 0; j < g; ++j) {
                Configuration c = base;
                c.translate_hole(gens[j]);
                table_[static_cast<std::size_t>(r) * g + j] = static_cast<std::int32_t>(rank_permutation(c.layout()));
            }
        }
    };
    std::vector<std::thread> pool;
    const std::int64_t chunk = (size_ + workers_ - 1) / workers_;
    for (int w = 0; w < workers_; ++w)
        pool.emplace_back(fill, std::min(size_, w * chunk), std::min(size_, (w + 1) * chunk));
    for (auto& th : pool) th.join();
}

void SparseGroupWalk::step(const std::vector<double>& in, std::vector<double>& out) const {
    if (static_cast<std::int64_t>(in.size()) != size_) throw std::invalid_argument("vector has wrong length");
    out.assign(in.size(), 0.0);
    const std::size_t g = weights_.size();
    auto work = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            const std::int32_t* row = &table_[static_cast<std::size_t>(r) * g];
            double s = 0.0;
            for (std::size_t j = 0; j < g; ++j) s += weights_[j] * in[static_cast<std::size_t>(row[j])];
            out[static_cast<std::size_t>(r)] = s;
        }
    };
    if (workers_ == 1) {
        work(0, size_);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (size_ + workers_ - 1) / workers_;
    for (int w = 0; w < workers_; ++w)
        pool.emplace_back(work, std::min(size_, w * chunk), std::min(size_, (w + 1) * chunk));
    for (auto& th : pool) th.join();
}

double SparseGroupWalk::dirichlet_form(const std::vector<double>& f) const {
    if (static_cast<std::int64_t>(f.size()) != size_) throw std::invalid_argument("vector has wrong length");
    const std::size_t g = weights_.size();
    double s = 0.0;
    for (std::int64_t r = 0; r < size_; ++r) {
        const std::int32_t* row = &table_[static_cast<std::size_t>(r) * g];
        double fr = f[static_cast<std::size_t>(r)];
        for (std::size_t j = 0; j < g; ++j) {
            double d = fr - f[static_cast<std::size_t>(row[j])];
            s += weights_[j] * d * d;
        }
    }
    return 0.5 * s / static_cast<double>(size_);
}

MixingResult mixing_time_sparse(const SparseGroupWalk& w, double eps, std::int64_t t_max) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must be in (0,1)");
    MixingResult out;
    const auto k = static_cast<std::size_t>(w.size());
    const double u = 1.0 / static_cast<double>(k);
    std::vector<double> mu(k, 0.0), next;
    mu[static_cast<std::size_t>(w.start_index())] = 1.0;
    for (std::int64_t t = 0; t <= t_max; ++t) {
        double tv = 0.0;
        for (double v : mu) tv += std::abs(v - u);
        tv *= 0.5;
        out.curve.push_back(tv);
        if (tv <= eps) {
            out.t = t;
            out.converged = true;
            return out;
        }
        w.step(mu, next);
        mu.swap(next);
    }
    return out;
}

}  // namespace loyd
