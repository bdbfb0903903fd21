#include "loyd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace loyd {

namespace {

void check_square(const Matrix& p) {
    if (p.rows() == 0 || p.rows() != p.cols())
        throw std::invalid_argument("kernel must be a non-empty square matrix");
}

}  // namespace

Vector stationary_of(const Matrix& kernel) {
    check_square(kernel);
    const auto k = kernel.rows();
    // (P^T - I) pi = 0 with one row replaced by sum pi = 1
    Matrix a = kernel.transpose() - Matrix::Identity(k, k);
    a.row(k - 1).setOnes();
    Vector rhs = Vector::Zero(k);
    rhs(k - 1) = 1.0;
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.rank() < k) throw std::invalid_argument("kernel has no unique stationary distribution");
    Vector pi = lu.solve(rhs);
    for (auto& v : pi) v = std::max(v, 0.0);
    return pi / pi.sum();
}

FiniteChain::FiniteChain(Matrix kernel, Vector stationary, bool reversible)
    : p_(std::move(kernel)), pi_(std::move(stationary)), reversible_(reversible) {
    check_square(p_);
    if (pi_.size() != p_.rows()) throw std::invalid_argument("stationary vector has wrong length");
    for (Eigen::Index i = 0; i < p_.rows(); ++i) {
        if ((p_.row(i).array() < -1e-15).any()) throw std::invalid_argument("kernel has a negative entry");
        if (std::abs(p_.row(i).sum() - 1.0) > 1e-12)
            throw std::invalid_argument("kernel row " + std::to_string(i) + " does not sum to 1");
    }
    if ((pi_.array() < 0).any() || std::abs(pi_.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("stationary vector is not a distribution");
    if ((pi_.transpose() * p_ - pi_.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("pi P != pi");
    if (reversible_) {
        Matrix w = pi_.asDiagonal() * p_;
        if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("kernel is not reversible");
    }
}

FiniteChain FiniteChain::from_kernel(Matrix kernel, bool reversible) {
    Vector pi = stationary_of(kernel);
    return FiniteChain(std::move(kernel), std::move(pi), reversible);
}

double dirichlet_form(const FiniteChain& c, const Vector& f) {
    const auto& p = c.kernel();
    const auto& pi = c.stationary();
    if (f.size() != p.rows()) throw std::invalid_argument("function has wrong length");
    double s = 0.0;
    for (Eigen::Index x = 0; x < p.rows(); ++x)
        for (Eigen::Index y = 0; y < p.cols(); ++y) {
            double d = f(x) - f(y);
            s += pi(x) * p(x, y) * d * d;
        }
    return 0.5 * s;
}

double entropy_functional(const Vector& pi, const Vector& g) {
    if (pi.size() != g.size()) throw std::invalid_argument("length mismatch");
    if ((g.array() < 0).any()) throw std::invalid_argument("entropy needs g >= 0");
    const double mean = pi.dot(g);
    if (mean <= 0) return 0.0;
    // g log(g/Eg) - (g - Eg) = Eg [(1+u) log1p(u) - u] with u = g/Eg - 1, all terms >= 0
    double s = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        double u = g(i) / mean - 1.0;
        double term;
        if (u <= -1.0) {
            term = 1.0;
        } else if (std::abs(u) < 0.1) {
            // sum_{k>=2} (-1)^k u^k / (k(k-1))
            term = 0.0;
            double pw = u * u;
            for (int k = 2; k < 40; ++k) {
                term += ((k & 1) ? -1.0 : 1.0) * pw / (k * (k - 1.0));
                pw *= u;
            }
        } else {
            term = (1.0 + u) * std::log1p(u) - u;
        }
        s += pi(i) * term;
    }
    return mean * s;
}

double variance(const Vector& pi, const Vector& f) {
    double m = pi.dot(f);
    return pi.dot((f.array() - m).square().matrix());
}

double spectral_gap(const FiniteChain& c) {
    if (!c.reversible()) throw std::invalid_argument("spectral gap needs a reversible chain");
    if (c.size() == 1) return 1.0;
    Vector s = c.stationary().cwiseSqrt();
    Vector inv = s.cwiseInverse();
    Matrix a = s.asDiagonal() * c.kernel() * inv.asDiagonal();
    a = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending
    return 1.0 - ev(ev.size() - 2);
}

namespace {

struct Split {
    std::vector<int> keep, drop;
};

Split split_states(int size, const std::vector<int>& keep) {
    Split s;
    std::vector<char> in(size, 0);
    for (int k : keep) {
        if (k < 0 || k >= size) throw std::invalid_argument("state index out of range");
        if (in[k]) throw std::invalid_argument("duplicate state in restriction set");
        in[k] = 1;
    }
    if (keep.empty()) throw std::invalid_argument("restriction set is empty");
    s.keep = keep;
    std::sort(s.keep.begin(), s.keep.end());
    for (int i = 0; i < size; ++i)
        if (!in[i]) s.drop.push_back(i);
    return s;
}

Matrix block(const Matrix& p, const std::vector<int>& r, const std::vector<int>& c) {
    Matrix out(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = p(r[i], c[j]);
    return out;
}

// (I - P_SS)^{-1} P_SK
Matrix absorption(const Matrix& p, const Split& s) {
    const auto m = static_cast<Eigen::Index>(s.drop.size());
    Matrix a = Matrix::Identity(m, m) - block(p, s.drop, s.drop);
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.rank() < m) throw std::invalid_argument("eliminated set has a closed class; restriction undefined");
    return lu.solve(block(p, s.drop, s.keep));
}

}  // namespace

FiniteChain restrict_chain(const FiniteChain& c, const std::vector<int>& keep) {
    Split s = split_states(c.size(), keep);
    Matrix pk = block(c.kernel(), s.keep, s.keep);
    if (!s.drop.empty()) pk += block(c.kernel(), s.keep, s.drop) * absorption(c.kernel(), s);
    // renormalize rounding only
    for (Eigen::Index i = 0; i < pk.rows(); ++i) pk.row(i) /= pk.row(i).sum();
    Vector pi(s.keep.size());
    for (std::size_t i = 0; i < s.keep.size(); ++i) pi(i) = c.stationary()(s.keep[i]);
    if (pi.sum() <= 0) throw std::invalid_argument("restriction set has zero mass");
    pi /= pi.sum();
    return FiniteChain(std::move(pk), std::move(pi), c.reversible());
}

Vector harmonic_extension(const FiniteChain& c, const std::vector<int>& keep, const Vector& f_keep) {
    Split s = split_states(c.size(), keep);
    if (f_keep.size() != static_cast<Eigen::Index>(s.keep.size()))
        throw std::invalid_argument("function on restriction set has wrong length");
    // f_keep is indexed like the sorted keep set
    Vector f(c.size());
    for (std::size_t i = 0; i < s.keep.size(); ++i) f(s.keep[i]) = f_keep(i);
    if (!s.drop.empty()) {
        Vector fs = absorption(c.kernel(), s) * f_keep;
        for (std::size_t i = 0; i < s.drop.size(); ++i) f(s.drop[i]) = fs(i);
    }
    return f;
}

double tv_distance(const Vector& mu, const Vector& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("length mismatch");
    for (const Vector* v : {&mu, &nu})
        if (v->minCoeff() < -1e-12 || std::abs(v->sum() - 1.0) > 1e-9)
            throw std::invalid_argument("total variation needs probability vectors");
    return 0.5 * (mu - nu).cwiseAbs().sum();
}

double logsob_mixing_bound(double alpha, double state_count) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(state_count > std::exp(1.0))) throw std::invalid_argument("state space too small for log log");
    return (4.0 + std::log(std::log(state_count))) / (4.0 * alpha);
}

FiniteChain random_reversible_chain(int states, Rng& rng) {
    if (states < 2) throw std::invalid_argument("need at least 2 states");
    Matrix w = Matrix::Zero(states, states);
    // random spanning tree, then extra edges
    for (int v = 1; v < states; ++v) {
        int u = rng.below(v);
        double wt = 0.1 + rng.uniform();
        w(u, v) = w(v, u) = wt;
    }
    for (int u = 0; u < states; ++u)
        for (int v = u + 1; v < states; ++v)
            if (w(u, v) == 0.0 && rng.uniform() < 0.3) w(u, v) = w(v, u) = 0.1 + rng.uniform();
    Vector deg = w.rowwise().sum();
    Matrix p = Matrix::Zero(states, states);
    for (int u = 0; u < states; ++u) {
        for (int v = 0; v < states; ++v) p(u, v) = w(u, v) / (2.0 * deg(u));
        p(u, u) += 0.5;
    }
    return FiniteChain(std::move(p), deg / deg.sum(), true);
}

FflemmaReport verify_fflemma(int trials, Rng& rng) {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    FflemmaReport rep;
    rep.worst_margin = INFINITY;
    for (int t = 0; t < trials; ++t) {
        int k = 3 + rng.below(10);  // 3..12
        FiniteChain c = random_reversible_chain(k, rng);
        std::vector<int> keep;
        for (int i = 0; i < k; ++i)
            if (rng.coin()) keep.push_back(i);
        if (keep.empty() || static_cast<int>(keep.size()) == k) {
            keep.clear();
            int cut = 1 + rng.below(k - 1);
            for (int i = 0; i < cut; ++i) keep.push_back(i);
        }
        FiniteChain r = restrict_chain(c, keep);
        Vector fk(keep.size());
        for (auto& v : fk) v = 2.0 * rng.uniform() - 1.0;
        Vector f = harmonic_extension(c, keep, fk);
        double e = dirichlet_form(c, f);
        double er = dirichlet_form(r, fk);
        double margin = er - e;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        ++rep.trials;
        if (margin < -1e-12 * std::max(1.0, er)) {
            ++rep.violations;
            if (rep.counterexample.empty()) {
                std::ostringstream os;
                os.precision(17);
                os << "{\"states\":" << k << ",\"trial\":" << t << ",\"original\":" << e
                   << ",\"restricted\":" << er << "}";
                rep.counterexample = os.str();
            }
        }
    }
    return rep;
}

}  // namespace loyd
