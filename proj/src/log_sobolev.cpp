#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "loyd/spectral.hpp"

namespace loyd {

double log_sobolev_ratio(const FiniteChain& c, const Vector& f) {
    Vector g = f.cwiseAbs2();
    double ent = entropy_functional(c.stationary(), g);
    if (!(ent > 0)) return INFINITY;
    return dirichlet_form(c, f) / ent;
}

namespace {

// sum_y (w(x,y) + w(y,x)) (f(x) - f(y)) with w = pi P
Vector dirichlet_gradient(const Matrix& w2, const Vector& f) {
    Vector deg = w2.rowwise().sum();
    return deg.cwiseProduct(f) - w2 * f;
}

// d/df ENT(f^2) = 2 pi f log(f^2 / E f^2)
Vector entropy_gradient(const Vector& pi, const Vector& f) {
    Vector g = f.cwiseAbs2();
    double m = pi.dot(g);
    Vector out(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i)
        out(i) = g(i) > 0 ? 2.0 * pi(i) * f(i) * std::log(g(i) / m) : 0.0;
    return out;
}

void normalize(const Vector& pi, Vector& f) {
    f = f.cwiseMax(0.0);
    double m = std::sqrt(pi.dot(f.cwiseAbs2()));
    if (m > 0) f /= m;
}

struct Descent {
    double value;
    Vector f;
    bool converged;
};

Descent descend(const FiniteChain& c, const Matrix& w2, Vector f, double tol) {
    const Vector& pi = c.stationary();
    normalize(pi, f);
    double r = log_sobolev_ratio(c, f);
    if (!std::isfinite(r)) return {r, f, false};
    double step = 1.0;
    for (int it = 0; it < 5000; ++it) {
        double e = dirichlet_form(c, f);
        double ent = entropy_functional(pi, f.cwiseAbs2());
        Vector grad = (dirichlet_gradient(w2, f) * ent - entropy_gradient(pi, f) * e) / (ent * ent);
        double gn = grad.squaredNorm();
        if (gn == 0) return {r, f, true};
        bool moved = false;
        step = std::min(step * 4.0, 1e6);
        while (step > 1e-16) {
            Vector cand = f - step * grad;
            normalize(pi, cand);
            double rc = log_sobolev_ratio(c, cand);
            if (std::isfinite(rc) && rc <= r - 1e-4 * step * gn) {
                double drop = r - rc;
                f = std::move(cand);
                r = rc;
                moved = true;
                if (drop <= tol * std::max(1.0, std::abs(r))) return {r, f, true};
                break;
            }
            step *= 0.5;
        }
        if (!moved) return {r, f, true};
    }
    return {r, f, false};
}

}  // namespace

SpectralReport log_sobolev_estimate(const FiniteChain& c, Rng& rng, int restarts, double tol) {
    if (!c.reversible()) throw std::invalid_argument("log-Sobolev estimate needs a reversible chain");
    if (c.size() < 2) throw std::invalid_argument("need at least 2 states");
    if (restarts < 0) throw std::invalid_argument("restarts must be >= 0");
    const auto k = c.size();
    const Vector& pi = c.stationary();
    Matrix w = pi.asDiagonal() * c.kernel();
    Matrix w2 = w + w.transpose();
    w2.diagonal().setZero();

    SpectralReport rep;
    rep.gap = spectral_gap(c);
    rep.alpha_estimate = INFINITY;
    rep.converged = true;

    auto consider = [&](Vector start) {
        Descent d = descend(c, w2, std::move(start), tol);
        ++rep.restarts;
        if (d.value < rep.alpha_estimate) {
            rep.alpha_estimate = d.value;
            rep.argmin = d.f;
            rep.converged = d.converged;
        }
    };

    // eigenvector starts: near-constant perturbations and positive parts
    Vector s = pi.cwiseSqrt();
    Matrix a = s.asDiagonal() * c.kernel() * s.cwiseInverse().asDiagonal();
    a = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    for (int j = static_cast<int>(k) - 2; j >= std::max(0, static_cast<int>(k) - 5); --j) {
        Vector phi = s.cwiseInverse().cwiseProduct(es.eigenvectors().col(j));
        phi /= phi.cwiseAbs().maxCoeff();
        for (double sign : {1.0, -1.0}) {
            consider(Vector::Ones(k) + 1e-5 * sign * phi);
            consider((sign * phi).cwiseMax(0.0) + 1e-3 * Vector::Ones(k));
        }
    }
    // point masses
    for (int x = 0; x < std::min<int>(k, 8); ++x) {
        Vector f = Vector::Constant(k, 1e-2);
        f(x) = 1.0;
        consider(f);
    }
    for (int r = 0; r < restarts; ++r) {
        Vector f(k);
        for (auto& v : f) v = rng.uniform();
        if (r % 2 == 1)  // indicator-like
            for (auto& v : f) v = v < 0.3 ? 1.0 : 0.05 * v;
        consider(f);
    }
    rep.functional_value = rep.alpha_estimate;
    return rep;
}

}  // namespace loyd
