#include "loyd/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace loyd {

double mu_constant() {
    static const double mu = [] {
        double best = 0.0;
        for (int m = 5; m <= 1'000'000; ++m) {
            double v = -static_cast<double>(m) * m * std::log(std::cos(2.0 * std::numbers::pi / m));
            best = std::max(best, v);
        }
        return best;
    }();
    return mu;
}

double cos_feature(int n, int x) {
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(n));
}

ExperimentParams choose_parameters(int n, double c_user, bool allow_small) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (n < 5 && !allow_small)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    ": cos(2 pi / n) <= 0, so mu is undefined; pass an explicit override");
    if (!(c_user > 0)) throw std::invalid_argument("c_user must be positive");
    ExperimentParams p;
    p.n = n;
    p.mu = mu_constant();
    p.eps = 1.0 / (8.0 * p.mu);
    p.c_user = c_user;
    const double base = std::floor(1.0 + p.eps * n * n * std::log(static_cast<double>(n)));
    p.t_hat = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(c_user * base)));
    p.horizon = static_cast<std::int64_t>(n * n - 1) * p.t_hat;

    // the solved hole touches column 0; walk it out of reach of S first
    p.start_shift = n / 2;
    Configuration c = Configuration::solved(n);
    for (int i = 0; i < p.start_shift; ++i) c.apply_move(Direction::right);
    const Torus& t = c.torus();
    for (int lab = 1; lab < c.size(); ++lab)
        if (cos_feature(n, t.point(c.position_of(lab)).x) > 0.5) p.tiles.push_back(lab);
    for (int lab : p.tiles)
        for (Direction d : all_directions)
            if (t.add(t.point(c.position_of(lab)), step(d)) == c.hole() && n >= 5)
                throw std::logic_error("start leaves the hole next to a tile of S");
    p.start = c;
    return p;
}

TracedRun run_traced_loyd(const ExperimentParams& p, std::int64_t horizon, Rng& rng,
                          std::vector<std::int64_t> checkpoints) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    std::sort(checkpoints.begin(), checkpoints.end());
    if (!checkpoints.empty() && (checkpoints.front() < 0 || checkpoints.back() > horizon))
        throw std::invalid_argument("checkpoint outside [0, horizon]");
    TracedRun run;
    run.checkpoints = checkpoints;
    Configuration c = p.start;
    const Torus& t = c.torus();
    const int size = c.size();
    std::vector<int> slot(size, -1);
    for (std::size_t i = 0; i < p.tiles.size(); ++i) {
        slot[p.tiles[i]] = static_cast<int>(i);
        run.traces.push_back({p.tiles[i], {}, {}});
    }
    std::vector<std::int64_t> count(size, 0);
    std::size_t next_cp = 0;
    const Point right{1, 0};
    for (std::int64_t time = 0;; ++time) {
        const int hole = t.index(c.hole());
        for (int lab = 1; lab < size; ++lab) {
            const int pos = c.position_of(lab);
            if (t.index(t.add(t.point(pos), right)) != hole) continue;
            ++count[lab];
            if (slot[lab] >= 0) {
                auto& tr = run.traces[static_cast<std::size_t>(slot[lab])];
                tr.times.push_back(time);
                tr.xs.push_back(t.point(pos).x);
            }
        }
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == time) {
            run.counts.push_back(count);
            ++next_cp;
        }
        if (time == horizon) break;
        if (rng.coin()) {
            ++run.holds;
        } else {
            c.apply_move(all_directions[rng.below(4)]);
        }
        ++run.steps;
    }
    run.final_state = c;
    return run;
}

std::vector<int> s_walk_extract(int n, const TileTrace& tr) {
    std::vector<int> out;
    Torus t(n);
    for (std::size_t k = 1; k < tr.xs.size(); ++k) {
        int d = t.wrap(tr.xs[k] - tr.xs[k - 1]);
        if (d == 0) out.push_back(0);
        else if (d == 1) out.push_back(1);
        else if (d == n - 1) out.push_back(-1);
        else throw std::logic_error("s-walk jumped by " + std::to_string(d));
    }
    return out;
}

double wilson_statistic(const ExperimentParams& p, const Configuration& at_T) {
    if (at_T.n() != p.n) throw std::invalid_argument("configuration size mismatch");
    double w = 0.0;
    for (int lab : p.tiles) w += cos_feature(p.n, at_T.torus().point(at_T.position_of(lab)).x);
    return w;
}

std::optional<double> z_statistic(const ExperimentParams& p, const std::vector<TileTrace>& traces) {
    double z = 0.0;
    const auto k = static_cast<std::size_t>(p.t_hat);
    for (const auto& tr : traces) {
        if (tr.xs.size() < k) return std::nullopt;
        z += cos_feature(p.n, tr.xs[k - 1]);
    }
    return z;
}

double reference_statistic(int n, int k, Rng& rng) {
    const int size = n * n;
    if (k < 0 || k > size) throw std::invalid_argument("k must be in [0, n^2]");
    std::vector<int> pos(size);
    for (int i = 0; i < size; ++i) pos[i] = i;
    // partial Fisher-Yates
    double w = 0.0;
    for (int i = 0; i < k; ++i) {
        int j = i + rng.below(size - i);
        std::swap(pos[i], pos[j]);
        w += cos_feature(n, pos[i] % n);
    }
    return w;
}

double hoeffding_bound(double alpha, int k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    return std::exp(-2.0 * alpha * alpha / (4.0 * k));
}

WalkSymmetry walk_symmetry(int n, const std::vector<TileTrace>& traces) {
    WalkSymmetry r;
    double sff = 0.0, sf2 = 0.0;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& tr : traces) {
        for (int inc : s_walk_extract(n, tr)) {
            if (inc > 0) ++r.up;
            else if (inc < 0) ++r.down;
            else ++r.hold;
        }
        for (std::size_t k = 1; k < tr.xs.size(); ++k) {
            double a = cos_feature(n, tr.xs[k - 1]), b = cos_feature(n, tr.xs[k]);
            pairs.push_back({a, b});
            sff += a * b;
            sf2 += a * a;
        }
    }
    r.p_value = binomial_two_sided(r.up, r.up + r.down);
    if (sf2 > 0 && pairs.size() > 1) {
        r.slope = sff / sf2;
        double rss = 0.0;
        for (auto [a, b] : pairs) rss += (b - r.slope * a) * (b - r.slope * a);
        r.slope_se = std::sqrt(rss / static_cast<double>(pairs.size() - 1) / sf2);
    }
    return r;
}

std::vector<std::uint64_t> seed_list(std::uint64_t master, int count) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    std::vector<std::uint64_t> out;
    for (int i = 0; i < count; ++i) out.push_back(derive_seed(master, static_cast<std::uint64_t>(i)));
    return out;
}

namespace {

template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SeedRow> wilson_experiment(const ExperimentParams& p, const std::vector<std::uint64_t>& seeds, int workers) {
    std::vector<SeedRow> rows(seeds.size());
    parallel_for(seeds.size(), workers, [&](std::size_t i) {
        Rng sim(seeds[i], "wilson");
        Rng ref = sim.split(1, "reference");
        TracedRun run = run_traced_loyd(p, p.horizon, sim);
        SeedRow& row = rows[i];
        row.seed = seeds[i];
        row.w_dist = wilson_statistic(p, run.final_state);
        row.w_ref = reference_statistic(p.n, static_cast<int>(p.tiles.size()), ref);
        row.z = z_statistic(p, run.traces);
        for (const auto& tr : run.traces) row.n_total += static_cast<std::int64_t>(tr.times.size());
    });
    return rows;
}

ConcentrationReport count_concentration(int n, const std::vector<std::int64_t>& checkpoints,
                                        const std::vector<std::uint64_t>& seeds, int workers) {
    if (checkpoints.empty() || seeds.size() < 2) throw std::invalid_argument("need checkpoints and >= 2 seeds");
    const double lo = n * n * std::log(static_cast<double>(n)), hi = std::pow(n, 5.0);
    for (auto t : checkpoints)
        if (static_cast<double>(t) < lo || static_cast<double>(t) > hi)
            throw std::invalid_argument("checkpoint " + std::to_string(t) + " outside [n^2 log n, n^5]");
    ExperimentParams p = choose_parameters(n, 1.0, true);
    p.start = Configuration::solved(n);
    const std::int64_t horizon = *std::max_element(checkpoints.begin(), checkpoints.end());
    std::vector<TracedRun> runs(seeds.size());
    parallel_for(seeds.size(), workers, [&](std::size_t i) {
        Rng rng(seeds[i], "counts");
        runs[i] = run_traced_loyd(p, horizon, rng, checkpoints);
    });
    ConcentrationReport r;
    r.n = n;
    r.checkpoints = runs.front().checkpoints;
    const int size = n * n;
    for (std::size_t c = 0; c < r.checkpoints.size(); ++c) {
        const double t = static_cast<double>(r.checkpoints[c]);
        double dev = 0.0, var = 0.0;
        for (const auto& run : runs) {
            std::int64_t sum = 0;
            for (int lab = 1; lab < size; ++lab) sum += run.counts[c][lab];
            if (sum != r.checkpoints[c] + 1) r.partition_ok = false;
        }
        for (int lab = 1; lab < size; ++lab) {
            std::vector<double> xs;
            for (const auto& run : runs) xs.push_back(static_cast<double>(run.counts[c][lab]));
            MeanVar mv = mean_var(xs);
            dev = std::max(dev, std::abs(mv.mean - t / (size - 1)));
            var = std::max(var, mv.variance);
        }
        r.mean_dev.push_back(dev);
        r.max_var.push_back(var);
        r.a_hat = std::max(r.a_hat, dev / std::log(t));
        r.c_hat = std::max(r.c_hat, var * n * n / (t * std::log(t)));
    }
    return r;
}

}  // namespace loyd
