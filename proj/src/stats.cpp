#include "loyd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

namespace loyd {

MeanVar mean_var(const std::vector<double>& xs) {
    MeanVar r;
    double m = 0.0, s = 0.0;
    for (double x : xs) {
        ++r.count;
        double d = x - m;
        m += d / static_cast<double>(r.count);
        s += d * (x - m);
    }
    r.mean = m;
    r.variance = r.count > 1 ? s / static_cast<double>(r.count - 1) : 0.0;
    return r;
}

double binomial_two_sided(std::uint64_t k, std::uint64_t trials) {
    if (k > trials) throw std::invalid_argument("successes exceed trials");
    if (trials == 0) return 1.0;
    boost::math::binomial_distribution<double> dist(static_cast<double>(trials), 0.5);
    const double kk = static_cast<double>(k);
    double lower = boost::math::cdf(dist, kk);
    double upper = k == 0 ? 1.0 : boost::math::cdf(boost::math::complement(dist, kk - 1.0));
    return std::min(1.0, 2.0 * std::min(lower, upper));
}

ChiSquare chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs) {
    if (observed.size() != probs.size() || observed.size() < 2)
        throw std::invalid_argument("chi-square needs matching category lists of length >= 2");
    double total = 0.0, psum = 0.0;
    for (auto o : observed) total += static_cast<double>(o);
    for (double p : probs) {
        if (!(p > 0)) throw std::invalid_argument("category probabilities must be positive");
        psum += p;
    }
    if (std::abs(psum - 1.0) > 1e-12) throw std::invalid_argument("category probabilities must sum to 1");
    if (total == 0) throw std::invalid_argument("no observations");
    ChiSquare r;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = total * probs[i];
        double d = static_cast<double>(observed[i]) - e;
        r.statistic += d * d / e;
    }
    r.dof = static_cast<int>(observed.size()) - 1;
    r.p_value = chi_square_tail(r.statistic, r.dof);
    return r;
}

double chi_square_tail(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi-square needs dof >= 1");
    boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) throw std::invalid_argument("quantile of empty sample");
    std::sort(xs.begin(), xs.end());
    double pos = q * static_cast<double>(xs.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    auto hi = std::min(lo + 1, xs.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return xs[lo] * (1 - frac) + xs[hi] * frac;
}

namespace {

struct Binning {
    double lo = 0.0, width = 0.0;
    int bins = 0;  // 0 means exact-value comparison
};

Binning freedman_diaconis(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
    Binning bin;
    if (*mn == *mx) return bin;
    double iqr = quantile(pooled, 0.75) - quantile(pooled, 0.25);
    double h = 2.0 * iqr * std::cbrt(1.0 / static_cast<double>(pooled.size()));
    if (!(h > 0)) return bin;  // mass concentrated on few values
    bin.lo = *mn;
    bin.bins = std::clamp(static_cast<int>(std::ceil((*mx - *mn) / h)), 1, 1000);
    bin.width = (*mx - *mn) / bin.bins;
    return bin;
}

double tv_binned(const std::vector<double>& a, const std::vector<double>& b, const Binning& bin) {
    if (bin.bins == 0) {
        std::map<double, double> diff;
        for (double x : a) diff[x] += 1.0 / static_cast<double>(a.size());
        for (double x : b) diff[x] -= 1.0 / static_cast<double>(b.size());
        double s = 0.0;
        for (const auto& [k, v] : diff) s += std::abs(v);
        return 0.5 * s;
    }
    std::vector<double> h(static_cast<std::size_t>(bin.bins), 0.0);
    auto idx = [&](double x) {
        int i = static_cast<int>(std::floor((x - bin.lo) / bin.width));
        return static_cast<std::size_t>(std::clamp(i, 0, bin.bins - 1));
    };
    for (double x : a) h[idx(x)] += 1.0 / static_cast<double>(a.size());
    for (double x : b) h[idx(x)] -= 1.0 / static_cast<double>(b.size());
    double s = 0.0;
    for (double v : h) s += std::abs(v);
    return 0.5 * s;
}

}  // namespace

Interval tv_separation(const std::vector<double>& a, const std::vector<double>& b, Rng& rng, int bootstrap,
                       double level) {
    if (a.empty() || b.empty()) throw std::invalid_argument("tv_separation needs non-empty samples");
    if (bootstrap < 1 || !(level > 0 && level < 1)) throw std::invalid_argument("bad bootstrap settings");
    const Binning bin = freedman_diaconis(a, b);
    Interval r;
    r.estimate = tv_binned(a, b, bin);
    std::vector<double> reps;
    std::vector<double> ra(a.size()), rb(b.size());
    for (int i = 0; i < bootstrap; ++i) {
        for (auto& x : ra) x = a[static_cast<std::size_t>(rng.below(a.size()))];
        for (auto& x : rb) x = b[static_cast<std::size_t>(rng.below(b.size()))];
        reps.push_back(tv_binned(ra, rb, bin));
    }
    r.lo = quantile(reps, 0.5 * (1 - level));
    r.hi = quantile(reps, 1 - 0.5 * (1 - level));
    return r;
}

}  // namespace loyd
