#include "loyd/comparison.hpp"

#include <cmath>
#include <functional>

#include <json.hpp>

namespace loyd {

namespace {

std::string key_label(int n, const StringKey& k) { return to_string(string_of(n, k)); }

// accumulates sum_Y P(Y) N(Y,z) |Y| per target generator z
struct Accumulator {
    std::map<StringKey, double> mass;

    void add(double weight, const std::vector<StringKey>& factors) {
        const double len = static_cast<double>(factors.size());
        for (const auto& z : factors) mass[z] += weight * len;  // once per occurrence gives N(Y,z)|Y|
    }

    ComparisonReport finish(const std::string& layer, int n, const Support& target) const {
        ComparisonReport r;
        r.layer = layer;
        r.n = n;
        r.method = "exact-enumeration";
        for (const auto& [z, m] : mass) {
            auto it = target.find(z);
            if (it == target.end()) throw std::logic_error(layer + ": emitted a generator outside the target support");
            const double a = m / it->second;
            r.per_generator[key_label(n, z)] = a;
            if (a > r.A) {
                r.A = a;
                r.argmax = key_label(n, z);
            }
        }
        return r;
    }
};

std::vector<StringKey> point_keys(int n, const std::vector<Point>& pts) {
    Torus t(n);
    std::vector<StringKey> out;
    for (Point p : pts) out.push_back({t.index(p)});
    return out;
}

}  // namespace

std::string to_json(const ComparisonReport& r) {
    nlohmann::ordered_json j;
    j["layer"] = r.layer;
    j["n"] = r.n;
    j["A"] = r.A;
    j["argmax"] = r.argmax;
    j["method"] = r.method;
    j["samples"] = r.samples;
    j["low_confidence"] = r.low_confidence;
    j["per_generator"] = r.per_generator;
    if (!r.std_error.empty()) j["std_error"] = r.std_error;
    return j.dump();
}

ComparisonReport compare_rt_hc(int n, bool holding) {
    const int m = n * n;
    const double move = holding ? 0.5 : 1.0;
    // target generators keyed by the tile swapped with the hole; {0} is holding
    Support target;
    if (holding) target[{0}] = 0.5;
    for (int i = 1; i < m; ++i) target[{i}] = move / (m - 1);

    Accumulator acc;
    auto add = [&](double w, const LabelString& rep) {
        std::vector<StringKey> f;
        for (auto t : rep) f.push_back({t.a == t.b ? 0 : t.b});
        acc.add(w, f);
    };
    if (holding) add(0.5, represent_rt_via_hc(m, {0, 0}, holding));
    const double pair = move / (0.5 * m * (m - 1));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) add(pair, represent_rt_via_hc(m, {a, b}, holding));

    // labels here are tiles, not points; report them as such
    ComparisonReport r;
    r.layer = "rt-hc";
    r.n = n;
    r.method = "exact-enumeration";
    for (const auto& [z, mass] : acc.mass) {
        const double a = mass / target.at(z);
        const std::string label = z[0] == 0 ? "(h,h)" : "(h," + std::to_string(z[0]) + ")";
        r.per_generator[label] = a;
        if (a > r.A) {
            r.A = a;
            r.argmax = label;
        }
    }
    return r;
}

namespace {

struct OrModel {
    double outer_hold;  // mass of the OR holding move outside the construction
    double step_zero;   // per-step probability of the good move 0
    double step_each;   // per-step probability of one specific nonzero move
    double beta;        // per-step probability of a bad move
    double gamma;       // per-step probability of a good move
    double bgb_hold;
    double nb, no, ng;
};

OrModel or_model(int n, const ChainOptions& opts) {
    const int m = n * n;
    OrModel o{};
    o.nb = static_cast<double>(bad_points(n).size());
    o.no = static_cast<double>(odd_points(n).size());
    o.ng = o.no + 1.0;
    const bool counted = opts.or_holding == OrHolding::counted;
    o.outer_hold = opts.holding && !counted ? 0.5 : 0.0;
    o.step_zero = opts.holding && counted ? 0.5 : 0.0;
    o.step_each = (1.0 - o.step_zero) / (m - 1);
    o.beta = o.nb * o.step_each;
    o.gamma = 1.0 - o.beta;
    o.bgb_hold = opts.holding ? 0.5 : 0.0;
    return o;
}

const char* const kClasses[] = {"hold", "odd", "bad-bad", "bad-odd-bad", "bad-zero-bad"};

}  // namespace

ComparisonReport compare_or_bgb_series(int n, const ChainOptions& opts) {
    const OrModel o = or_model(n, opts);
    const double form = (1.0 - o.bgb_hold) / 3.0;
    const double m_src = 1.0 - o.outer_hold;
    const double s2 = o.gamma * (1.0 + o.gamma) / std::pow(1.0 - o.gamma, 3);  // sum k^2 gamma^k

    std::map<std::string, double> a;
    a["hold"] = (o.outer_hold + m_src * o.step_zero) / (o.bgb_hold + form / o.ng);
    a["odd"] = m_src * o.step_each / (form / o.ng);
    a["bad-bad"] = m_src * o.step_each * o.step_each / (form / (o.nb * o.nb));
    const double triple = form / (o.nb * o.nb * o.ng);
    a["bad-odd-bad"] = m_src * o.beta * o.beta * s2 * (o.step_each / o.gamma) / (o.nb * o.nb) / triple;
    a["bad-zero-bad"] = m_src * o.beta * o.beta * s2 * (o.step_zero / o.gamma) / (o.nb * o.nb) / triple;

    ComparisonReport r;
    r.layer = "or-bgb";
    r.n = n;
    r.method = "exact-series";
    r.per_generator = a;
    for (const auto& [k, v] : a)
        if (v > r.A) {
            r.A = v;
            r.argmax = k;
        }
    return r;
}

ComparisonReport compare_or_bgb_monte_carlo(int n, const ChainOptions& opts, std::uint64_t samples, Rng& rng) {
    const OrModel o = or_model(n, opts);
    MoveDistribution src(ChainTag::or_chain, n, opts);
    MoveDistribution bgb(ChainTag::bgb, n, opts);
    const double form = (1.0 - o.bgb_hold) / 3.0;
    // |class| * p(z) for each pooled class
    const double weight[5] = {o.bgb_hold + form / o.ng, o.no * form / o.ng, form, o.no * form / o.ng, form / o.ng};

    double sum[5] = {}, sum_sq[5] = {};
    for (std::uint64_t i = 0; i < samples; ++i) {
        const MoveString y = src.sample(rng);
        const Representation rep = represent_or_via_bgb(y, bgb, rng);
        int count[5] = {};
        for (const auto& f : rep.factors) {
            const auto& mv = f.moves;
            const bool z0 = mv.size() >= 1 && mv[mv.size() == 3 ? 1 : 0] == Point{0, 0};
            if (mv.size() == 1) ++count[z0 ? 0 : 1];
            else if (mv.size() == 2) ++count[2];
            else ++count[z0 ? 4 : 3];
        }
        const double len = static_cast<double>(rep.length());
        for (int c = 0; c < 5; ++c) {
            const double x = count[c] * len / weight[c];
            sum[c] += x;
            sum_sq[c] += x * x;
        }
    }
    ComparisonReport r;
    r.layer = "or-bgb";
    r.n = n;
    r.method = "monte-carlo";
    r.samples = samples;
    r.low_confidence = samples < 10'000;
    const auto ns = static_cast<double>(samples);
    for (int c = 0; c < 5; ++c) {
        if (weight[c] <= 0.0) continue;
        const double mean = sum[c] / ns;
        const double var = std::max(0.0, sum_sq[c] / ns - mean * mean);
        r.per_generator[kClasses[c]] = mean;
        r.std_error[kClasses[c]] = std::sqrt(var / ns);
        if (mean > r.A) {
            r.A = mean;
            r.argmax = kClasses[c];
        }
    }
    return r;
}

ComparisonReport compare_bgb_pc(int n, bool holding) {
    ChainOptions opts;
    opts.holding = holding;
    MoveDistribution bgb(ChainTag::bgb, n, opts);
    MoveDistribution pc(ChainTag::pc, n, opts);
    const auto odd = odd_points(n);
    const auto bad = bad_points(n);
    Accumulator acc;
    for (const auto& [k, p] : bgb.support()) {
        const MoveString y = string_of(n, k);
        const bool pair = y.moves.size() == 2 || (y.moves.size() == 3 && y.moves[1] == Point{0, 0});
        if (!pair) {
            acc.add(p, point_keys(n, flatten(represent_bgb_via_pc(y, Point{1, 0}, Point{1, 1})).moves));
            continue;
        }
        const double w = p / static_cast<double>(odd.size() * bad.size());
        for (Point g : odd)
            for (Point b : bad) acc.add(w, point_keys(n, flatten(represent_bgb_via_pc(y, g, b)).moves));
    }
    return acc.finish("bgb-pc", n, pc.support());
}

ComparisonReport compare_deterministic(const std::string& layer, int n, bool holding) {
    ChainOptions opts;
    opts.holding = holding;
    ChainTag src;
    ChainTag dst;
    std::function<std::vector<Point>(Point)> rep;
    if (layer == "pc-nl") {
        src = ChainTag::pc;
        dst = ChainTag::nl;
        rep = [n](Point y) { return represent_pc_via_nl(n, y); };
    } else if (layer == "nl-loyd") {
        src = ChainTag::nl;
        dst = ChainTag::loyd;
        rep = [n](Point y) { return represent_nl_via_loyd(n, y); };
    } else if (layer == "pc-loyd") {
        src = ChainTag::pc;
        dst = ChainTag::loyd;
        rep = [n](Point y) { return represent_pc_via_loyd(n, y); };
    } else if (layer == "hc-loyd") {
        src = ChainTag::hc;
        dst = ChainTag::loyd;
        rep = [n](Point y) { return represent_hc_via_loyd(n, y); };
    } else {
        throw std::invalid_argument("no deterministic comparison for layer '" + layer + "'");
    }
    MoveDistribution source(src, n, opts);
    MoveDistribution target(dst, n, opts);
    Accumulator acc;
    Torus t(n);
    for (const auto& [k, p] : source.support()) acc.add(p, point_keys(n, rep(t.point(k[0]))));
    return acc.finish(layer, n, target.support());
}

}  // namespace loyd
