#include <algorithm>
#include <stdexcept>

#include "loyd/spectral.hpp"

namespace loyd {

namespace {

MixingResult run(const FiniteChain& c, Matrix dist, double eps, std::int64_t t_max) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must be in (0,1)");
    if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
    MixingResult out;
    const Vector& pi = c.stationary();
    for (std::int64_t t = 0; t <= t_max; ++t) {
        double worst = 0.0;
        for (Eigen::Index r = 0; r < dist.rows(); ++r)
            worst = std::max(worst, tv_distance(dist.row(r).transpose(), pi));
        out.curve.push_back(worst);
        if (worst <= eps) {
            out.t = t;
            out.converged = true;
            return out;
        }
        dist = dist * c.kernel();
    }
    return out;
}

}  // namespace

MixingResult mixing_time_exact(const FiniteChain& c, double eps, std::int64_t t_max) {
    return run(c, Matrix::Identity(c.size(), c.size()), eps, t_max);
}

MixingResult mixing_time_group_walk(const FiniteChain& c, int start, double eps, std::int64_t t_max) {
    if (start < 0 || start >= c.size()) throw std::invalid_argument("start out of range");
    Matrix d = Matrix::Zero(1, c.size());
    d(0, start) = 1.0;
    return run(c, std::move(d), eps, t_max);
}

}  // namespace loyd
