#include "loyd/tilde_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "loyd/configuration.hpp"

namespace loyd {

TildeGraph::TildeGraph(int n) : t_(n) {
    if (n <= 2) throw std::invalid_argument("n = " + std::to_string(n) + ": the surgery edges degenerate for n <= 2");
    adj_.resize(static_cast<std::size_t>(size()));
    for (int v = 0; v < size(); ++v) {
        const Point p = point(v);
        for (Direction d : all_directions) {
            Point w = t_.add(p, loyd::step(d));
            if (w == Point{0, 0}) w = t_.add(w, loyd::step(d));  // jump over the deleted origin
            adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] = t_.index(w) - 1;
        }
    }
}

int TildeGraph::vertex(Point p) const {
    int i = t_.index(p);
    if (i == 0) throw std::invalid_argument("the origin is not a vertex");
    return i - 1;
}

int TildeGraph::degree(int v) const {
    int d = 0;
    for (int w : adj_[static_cast<std::size_t>(v)]) d += w != v;
    return d;
}

void TildeGraph::step(const std::vector<double>& in, std::vector<double>& out) const {
    out.assign(in.size(), 0.0);
    for (int v = 0; v < size(); ++v) {
        const double m = in[static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(v)] += 0.5 * m;
        for (int w : adj_[static_cast<std::size_t>(v)]) out[static_cast<std::size_t>(w)] += 0.125 * m;
    }
}

RelativeWalkReport relative_walk_equivalence(int n, std::uint64_t steps, Rng& rng) {
    TildeGraph g(n);
    Configuration c = Configuration::solved(n);
    const Torus& t = c.torus();
    const int tile = 1;
    auto relative = [&] { return t.sub(c.hole(), t.point(c.position_of(tile))); };

    RelativeWalkReport rep;
    std::vector<std::uint64_t> visits(static_cast<std::size_t>(g.size()), 0);
    std::map<std::pair<int, int>, std::uint64_t> trans;
    Point r = relative();
    for (std::uint64_t i = 0; i < steps; ++i) {
        if (!rng.coin()) c.apply_move(all_directions[rng.below(4)]);
        Point next = relative();
        ++rep.steps;
        if (next == Point{0, 0}) {
            ++rep.hit_origin;  // hole and tile coincide; nothing sensible follows
            break;
        }
        const int v = g.vertex(r), w = g.vertex(next);
        ++visits[static_cast<std::size_t>(v)];
        ++trans[{v, w}];
        int cat = -1;
        if (w == v) cat = 4;
        for (int d = 0; d < 4 && cat < 0; ++d)
            if (g.neighbour(v, all_directions[d]) == w) cat = d;
        if (cat < 0) ++rep.illegal;
        else ++rep.categories[static_cast<std::size_t>(cat)];
        r = next;
    }
    // goodness of fit of every row of the kernel, given the visit counts
    double stat = 0.0;
    int dof = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (visits[static_cast<std::size_t>(v)] == 0) continue;
        std::map<int, double> q{{v, 0.5}};
        for (Direction d : all_directions) q[g.neighbour(v, d)] += 0.125;
        for (const auto& [w, p] : q) {
            double e = static_cast<double>(visits[static_cast<std::size_t>(v)]) * p;
            auto it = trans.find({v, w});
            double o = it == trans.end() ? 0.0 : static_cast<double>(it->second);
            stat += (o - e) * (o - e) / e;
        }
        dof += static_cast<int>(q.size()) - 1;
    }
    rep.chi.statistic = stat;
    rep.chi.dof = dof;
    rep.chi.p_value = dof > 0 ? chi_square_tail(stat, dof) : 1.0;

    // an independent run of the graph walk for the occupation comparison
    std::vector<std::uint64_t> walk(static_cast<std::size_t>(g.size()), 0);
    int v = g.vertex(Point{n - 1, 0});
    for (std::uint64_t i = 0; i < steps; ++i) {
        if (!rng.coin()) v = g.neighbour(v, all_directions[rng.below(4)]);
        ++walk[static_cast<std::size_t>(v)];
    }
    double tv = 0.0, total_a = 0.0;
    for (auto x : visits) total_a += static_cast<double>(x);
    for (int u = 0; u < g.size(); ++u)
        tv += std::abs(static_cast<double>(visits[static_cast<std::size_t>(u)]) / total_a -
                       static_cast<double>(walk[static_cast<std::size_t>(u)]) / static_cast<double>(steps));
    rep.occupation_tv = 0.5 * tv;
    return rep;
}

HeatKernelCurve heat_kernel_curve(const TildeGraph& g, Point x, std::int64_t t_max) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    HeatKernelCurve out;
    const double pi = 1.0 / g.size();
    std::vector<double> p(static_cast<std::size_t>(g.size()), 0.0), next;
    p[static_cast<std::size_t>(g.vertex(x))] = 1.0;
    for (std::int64_t t = 1; t <= t_max; ++t) {
        g.step(p, next);
        p.swap(next);
        double m = 0.0, mass = 0.0;
        for (double v : p) {
            m = std::max(m, std::abs(v - pi));
            mass += v;
        }
        out.max_mass_error = std::max(out.max_mass_error, std::abs(mass - 1.0));
        out.m.push_back(m);
        out.a_hat = std::max(out.a_hat, static_cast<double>(t) * m);
    }
    return out;
}

double boundary_ratio(const TildeGraph& g, const std::vector<int>& set) {
    if (set.empty()) throw std::invalid_argument("set must be non-empty");
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (int v : set) in[static_cast<std::size_t>(v)] = 1;
    double out = 0.0;
    for (int v : set)
        for (Direction d : all_directions) out += !in[static_cast<std::size_t>(g.neighbour(v, d))] ? 0.125 : 0.0;
    // pi is uniform, so Q(S,S^c)/pi(S) = (sum of exiting q) / |S|
    return out / static_cast<double>(set.size());
}

namespace {

ConductanceProfile finish_profile(const TildeGraph& g, std::vector<double> best_by_size, bool exact) {
    ConductanceProfile prof;
    prof.exact = exact;
    const double vsize = g.size();
    double run = INFINITY;
    prof.c_tilde = INFINITY;
    for (std::size_t k = 1; k < best_by_size.size(); ++k) {
        run = std::min(run, best_by_size[k]);
        const double u = static_cast<double>(k) / vsize;
        prof.r.push_back(u);
        prof.phi.push_back(run);
        prof.c_tilde = std::min(prof.c_tilde, run * g.n() * std::sqrt(u));
    }
    return prof;
}

}  // namespace

ConductanceProfile conductance_exhaustive(const TildeGraph& g) {
    if (g.n() > 4) throw std::invalid_argument("exhaustive conductance is limited to n <= 4");
    const int v = g.size();
    const int kmax = v / 2;
    std::vector<double> best(static_cast<std::size_t>(kmax + 1), INFINITY);
    for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k > kmax) continue;
        int cut = 0;
        for (int x = 0; x < v; ++x) {
            if (!(mask >> x & 1u)) continue;
            for (Direction d : all_directions) cut += !(mask >> g.neighbour(x, d) & 1u);
        }
        best[static_cast<std::size_t>(k)] = std::min(best[static_cast<std::size_t>(k)], 0.125 * cut / k);
    }
    return finish_profile(g, best, true);
}

ConductanceProfile conductance_annealed(const TildeGraph& g, Rng& rng, int restarts, int sweeps) {
    if (restarts < 1 || sweeps < 1) throw std::invalid_argument("restarts and sweeps must be >= 1");
    const int v = g.size();
    const int kmax = v / 2;
    std::vector<double> best(static_cast<std::size_t>(kmax + 1), INFINITY);
    std::vector<char> in(static_cast<std::size_t>(v));
    auto cut_of = [&](const std::vector<int>& s) {
        int cut = 0;
        for (int x : s)
            for (Direction d : all_directions) cut += !in[static_cast<std::size_t>(g.neighbour(x, d))];
        return cut;
    };
    auto connected = [&](const std::vector<int>& s) {
        std::vector<int> stack{s.front()};
        std::vector<char> seen(static_cast<std::size_t>(v), 0);
        seen[static_cast<std::size_t>(s.front())] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (Direction d : all_directions) {
                int y = g.neighbour(x, d);
                if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        return count == s.size();
    };
    for (int k = 1; k <= kmax; ++k) {
        for (int rs = 0; rs < restarts; ++rs) {
            // grow a random connected seed set
            std::fill(in.begin(), in.end(), 0);
            std::vector<int> s{rng.below(v)};
            in[static_cast<std::size_t>(s[0])] = 1;
            while (static_cast<int>(s.size()) < k) {
                int x = s[static_cast<std::size_t>(rng.below(s.size()))];
                int y = g.neighbour(x, all_directions[rng.below(4)]);
                if (!in[static_cast<std::size_t>(y)]) {
                    in[static_cast<std::size_t>(y)] = 1;
                    s.push_back(y);
                }
            }
            int cut = cut_of(s);
            best[static_cast<std::size_t>(k)] = std::min(best[static_cast<std::size_t>(k)], 0.125 * cut / k);
            if (k == 1) continue;
            for (int it = 0; it < sweeps; ++it) {
                const double temp = 2.0 * (1.0 - static_cast<double>(it) / sweeps) + 1e-3;
                // swap one member for one outside neighbour
                std::size_t i = static_cast<std::size_t>(rng.below(s.size()));
                int x = s[i];
                int y = g.neighbour(s[static_cast<std::size_t>(rng.below(s.size()))], all_directions[rng.below(4)]);
                if (in[static_cast<std::size_t>(y)]) continue;
                in[static_cast<std::size_t>(x)] = 0;
                in[static_cast<std::size_t>(y)] = 1;
                s[i] = y;
                int nc = cut_of(s);
                bool accept = connected(s) && (nc <= cut || rng.uniform() < std::exp((cut - nc) / temp));
                if (accept) {
                    cut = nc;
                    best[static_cast<std::size_t>(k)] = std::min(best[static_cast<std::size_t>(k)], 0.125 * cut / k);
                } else {
                    in[static_cast<std::size_t>(y)] = 0;
                    in[static_cast<std::size_t>(x)] = 1;
                    s[i] = x;
                }
            }
        }
    }
    return finish_profile(g, best, false);
}

std::int64_t hk2_sufficient_time(const ConductanceProfile& prof, double pi_min, double eps) {
    if (prof.r.empty() || prof.r.size() != prof.phi.size()) throw std::invalid_argument("empty or malformed profile");
    if (!(eps > 0) || !(pi_min > 0)) throw std::invalid_argument("eps and pi_min must be positive");
    if (pi_min < prof.r.front() - 1e-15) throw std::invalid_argument("profile does not cover pi_min");
    for (double p : prof.phi)
        if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("profile has a gap");
    const double top = 4.0 / eps;
    double integral = 0.0;
    // Phi(u) = phi[i] on [r[i], r[i+1]), last value beyond
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        double lo = std::max(prof.r[i], pi_min);
        double hi = i + 1 < prof.r.size() ? prof.r[i + 1] : INFINITY;
        hi = std::min(hi, top);
        if (hi <= lo) continue;
        integral += 4.0 / (prof.phi[i] * prof.phi[i]) * std::log(hi / lo);
    }
    return static_cast<std::int64_t>(std::ceil(1.0 + integral));
}

double uniform_ratio_deviation(const TildeGraph& g, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const double pi = 1.0 / g.size();
    double worst = 0.0;
    std::vector<double> p, next;
    for (int x = 0; x < g.size(); ++x) {
        p.assign(static_cast<std::size_t>(g.size()), 0.0);
        p[static_cast<std::size_t>(x)] = 1.0;
        for (std::int64_t s = 0; s < t; ++s) {
            g.step(p, next);
            p.swap(next);
        }
        for (double v : p) worst = std::max(worst, std::abs(v - pi) / pi);
    }
    return worst;
}

}  // namespace loyd
