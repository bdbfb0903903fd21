#include "loyd/ruin_walks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "loyd/stats.hpp"

namespace loyd {

Rational gambler_ruin_exact(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k == 1) return Rational(1);
    // only y matters: h(0) = 0, h(k) = 1, h(y) = (h(y-1) + h(y+1)) / 2.
    // Forward elimination writes h(y) = a[y] h(y+1).
    std::vector<Rational> a(static_cast<std::size_t>(k), Rational(0));
    for (int y = 1; y < k; ++y) a[static_cast<std::size_t>(y)] = Rational(1) / (Rational(2) - a[static_cast<std::size_t>(y - 1)]);
    Rational h = 1;  // h(k)
    for (int y = k - 1; y >= 1; --y) h = a[static_cast<std::size_t>(y)] * h;
    return h;
}

namespace {

using Sparse = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

}  // namespace

double gambler_ruin_strip(int k, int width) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (width < 3) throw std::invalid_argument("strip width must be >= 3");
    if (k == 1) return 1.0;
    const int rows = k - 1;
    auto id = [&](int x, int y) { return ((x % width + width) % width) + width * (y - 1); };
    const int size = width * rows;
    std::vector<Triplet> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
    for (int y = 1; y <= rows; ++y)
        for (int x = 0; x < width; ++x) {
            const int i = id(x, y);
            trip.emplace_back(i, i, 1.0);
            trip.emplace_back(i, id(x - 1, y), -0.25);
            trip.emplace_back(i, id(x + 1, y), -0.25);
            if (y + 1 == k) rhs(i) += 0.25;
            else trip.emplace_back(i, id(x, y + 1), -0.25);
            if (y > 1) trip.emplace_back(i, id(x, y - 1), -0.25);
        }
    Sparse a(size, size);
    a.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Sparse> lu(a);
    if (lu.info() != Eigen::Success) throw std::runtime_error("strip system is singular");
    Eigen::VectorXd h = lu.solve(rhs);
    return h(id(0, 1));
}

ExitSide exit_side_exact(int k, double tol) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    ExitSide out;
    const int width = 2 * k - 1;  // x = -(k-1) .. k-1
    for (int ceiling = 4 * k + 4; ceiling <= (1 << 16); ceiling *= 2) {
        const int rows = ceiling - 1;
        auto id = [&](int x, int y) { return (x + k - 1) + width * (y - 1); };
        const int size = width * rows;
        std::vector<Triplet> trip;
        Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(size, 2);  // side, ceiling
        for (int y = 1; y <= rows; ++y)
            for (int x = -(k - 1); x <= k - 1; ++x) {
                const int i = id(x, y);
                trip.emplace_back(i, i, 1.0);
                for (int dx : {-1, 1}) {
                    if (std::abs(x + dx) >= k) rhs(i, 0) += 0.25;
                    else trip.emplace_back(i, id(x + dx, y), -0.25);
                }
                if (y + 1 == ceiling) rhs(i, 1) += 0.25;
                else trip.emplace_back(i, id(x, y + 1), -0.25);
                if (y > 1) trip.emplace_back(i, id(x, y - 1), -0.25);
            }
        Sparse a(size, size);
        a.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Sparse> lu(a);
        if (lu.info() != Eigen::Success) throw std::runtime_error("exit system is singular");
        Eigen::MatrixXd h = lu.solve(rhs);
        out.lower = h(id(0, 1), 0);
        out.upper = out.lower + h(id(0, 1), 1);
        out.ceiling = ceiling;
        if (out.upper - out.lower < tol) {
            out.converged = true;
            break;
        }
    }
    out.value = 0.5 * (out.lower + out.upper);
    return out;
}

MartingaleCheck martingale_check(int k, const std::vector<std::int64_t>& times, int walks, Rng& rng) {
    if (k < 1 || walks < 2 || times.empty()) throw std::invalid_argument("bad martingale check settings");
    MartingaleCheck out;
    out.times = times;
    const std::int64_t horizon = *std::max_element(times.begin(), times.end());
    std::vector<std::vector<double>> ys(times.size()), qs(times.size());
    for (int w = 0; w < walks; ++w) {
        std::int64_t x = 0, y = 1;
        bool stopped = false;
        for (std::int64_t t = 0; t <= horizon; ++t) {
            for (std::size_t c = 0; c < times.size(); ++c)
                if (times[c] == t) {
                    ys[c].push_back(static_cast<double>(y));
                    qs[c].push_back(static_cast<double>(y * y - x * x));
                }
            if (!stopped) {
                switch (rng.below(4)) {
                    case 0: ++x; break;
                    case 1: --x; break;
                    case 2: ++y; break;
                    default: --y;
                }
                stopped = y <= 0 || std::abs(x) >= k;
            }
        }
    }
    for (std::size_t c = 0; c < times.size(); ++c) {
        MeanVar a = mean_var(ys[c]), b = mean_var(qs[c]);
        out.mean_y.push_back(a.mean);
        out.se_y.push_back(std::sqrt(a.variance / walks));
        out.mean_quad.push_back(b.mean);
        out.se_quad.push_back(std::sqrt(b.variance / walks));
    }
    return out;
}

}  // namespace loyd
