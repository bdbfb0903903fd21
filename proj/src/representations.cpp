#include "loyd/representations.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "loyd/errors.hpp"
#include "loyd/ladder.hpp"
#include "loyd/window_solver.hpp"

namespace loyd {

std::string to_string(Layer l) {
    switch (l) {
        case Layer::rt_hc: return "rt-hc";
        case Layer::or_bgb: return "or-bgb";
        case Layer::bgb_pc: return "bgb-pc";
        case Layer::pc_nl: return "pc-nl";
        case Layer::nl_loyd: return "nl-loyd";
        case Layer::hc_loyd: return "hc-loyd";
    }
    return "?";
}

Layer layer_from_string(const std::string& s) {
    for (Layer l : {Layer::rt_hc, Layer::or_bgb, Layer::bgb_pc, Layer::pc_nl, Layer::nl_loyd, Layer::hc_loyd})
        if (to_string(l) == s) return l;
    throw std::invalid_argument("unknown layer '" + s + "'");
}

ChainTag source_chain(Layer l) {
    switch (l) {
        case Layer::rt_hc: return ChainTag::rt;
        case Layer::or_bgb: return ChainTag::or_chain;
        case Layer::bgb_pc: return ChainTag::bgb;
        case Layer::pc_nl: return ChainTag::pc;
        case Layer::nl_loyd: return ChainTag::nl;
        case Layer::hc_loyd: return ChainTag::hc;
    }
    return ChainTag::loyd;
}

ChainTag target_chain(Layer l) {
    switch (l) {
        case Layer::rt_hc: return ChainTag::hc;
        case Layer::or_bgb: return ChainTag::bgb;
        case Layer::bgb_pc: return ChainTag::pc;
        case Layer::pc_nl: return ChainTag::nl;
        case Layer::nl_loyd: return ChainTag::loyd;
        case Layer::hc_loyd: return ChainTag::loyd;
    }
    return ChainTag::loyd;
}

MoveString flatten(const Representation& r) {
    MoveString s{r.n, {}};
    for (const auto& f : r.factors) s.moves.insert(s.moves.end(), f.moves.begin(), f.moves.end());
    return s;
}

Representation singletons(int n, const std::vector<Point>& moves) {
    Representation r{n, {}};
    for (Point p : moves) r.factors.push_back(MoveString{n, {p}});
    return r;
}

LabelString represent_rt_via_hc(int m, Transposition t, bool holding) {
    if (t.a < 0 || t.b < 0 || t.a >= m || t.b >= m) throw std::invalid_argument("transposition label out of range");
    constexpr int h = 0;
    if (t.a == t.b) {
        if (t.a != h) throw std::invalid_argument("transposition needs two distinct labels");
        return {{h, h}};  // the holding move
    }
    int i = std::min(t.a, t.b);
    int j = std::max(t.a, t.b);
    if (i == h) {
        if (holding) return {{h, h}, {h, j}, {h, h}};
        return {{h, j}};  // no holding generator to pad with
    }
    return {{h, i}, {h, j}, {h, i}};
}

namespace {

bool zero(Point p) { return p.x == 0 && p.y == 0; }

bool bad(int n, Point p) { return classify_move(n, p) == MoveClass::bad; }

}  // namespace

OrForm or_form(int n, const MoveString& y) {
    const auto& mv = y.moves;
    if (mv.empty()) throw std::invalid_argument("empty OR move");
    if (mv.size() == 1) {
        if (bad(n, mv[0])) throw std::invalid_argument("single-step OR move must be good");
        return OrForm::good;
    }
    if (!bad(n, mv.front()) || !bad(n, mv.back())) throw std::invalid_argument("OR move must start and end with bad moves");
    for (std::size_t i = 1; i + 1 < mv.size(); ++i)
        if (bad(n, mv[i])) throw std::invalid_argument("OR move has a bad move in the middle");
    return mv.size() == 2 ? OrForm::bad_bad : OrForm::bad_goods_bad;
}

Representation represent_or_via_bgb(const MoveString& y, const MoveDistribution& bgb, Rng& rng) {
    const int n = y.n;
    Torus t(n);
    Representation r{n, {}};
    switch (or_form(n, y)) {
        case OrForm::good:
        case OrForm::bad_bad: r.factors.push_back(y); return r;
        case OrForm::bad_goods_bad: break;
    }
    const auto& mv = y.moves;
    const std::size_t k = mv.size() - 2;
    Point left = mv.front();
    for (std::size_t i = 1; i <= k; ++i) {
        const Point right = i == k ? mv.back() : bgb.draw_bad(rng);
        r.factors.push_back(MoveString{n, {left, mv[i], right}});
        left = t.neg(right);
    }
    return r;
}

std::vector<Point> expand_even_odd_even(int n, Point e1, Point o, Point e2) {
    Torus t(n);
    const Point a = t.add(e1, o);
    const Point b = t.neg(o);
    const Point c = t.add(o, e2);
    const Point d = t.neg(t.add(t.add(e1, o), e2));
    return {a, b, c, d, a, b, c};
}

Representation represent_bgb_via_pc(const MoveString& y, Point aux_odd, Point aux_bad) {
    const int n = y.n;
    Torus t(n);
    const auto& mv = y.moves;
    std::vector<Point> out;
    if (mv.size() == 1) {
        if (bad(n, mv[0])) throw std::invalid_argument("single BGB generator must be good");
        out = {t.wrap(mv[0])};
    } else if (mv.size() == 2 || (mv.size() == 3 && zero(t.wrap(mv[1])))) {
        const Point b1 = mv.front();
        const Point b2 = mv.back();
        if (!bad(n, b1) || !bad(n, b2)) throw std::invalid_argument("BGB pair must be bad moves");
        if (!Torus::odd(t.wrap(aux_odd)) || !bad(n, aux_bad)) throw std::invalid_argument("auxiliary draws have the wrong class");
        out = expand_even_odd_even(n, b1, aux_odd, aux_bad);
        auto second = expand_even_odd_even(n, t.neg(aux_bad), t.neg(aux_odd), b2);
        out.insert(out.end(), second.begin(), second.end());
    } else if (mv.size() == 3) {
        if (!bad(n, mv[0]) || !bad(n, mv[2]) || !Torus::odd(t.wrap(mv[1])))
            throw std::invalid_argument("BGB triple must be bad, odd, bad");
        out = expand_even_odd_even(n, mv[0], mv[1], mv[2]);
    } else {
        throw std::invalid_argument("BGB generator has length " + std::to_string(mv.size()));
    }
    for (Point p : out)
        if (!zero(p) && !Torus::odd(p)) throw VerificationError("BGB -> PC emitted an even move");
    return singletons(n, out);
}

Representation represent_bgb_via_pc(const MoveString& y, const MoveDistribution& bgb, Rng& rng) {
    Point o{1, 0}, b{1, 1};
    const bool pair = y.moves.size() == 2 || (y.moves.size() == 3 && zero(Torus(y.n).wrap(y.moves[1])));
    if (pair) {
        o = bgb.draw_odd(rng);
        b = bgb.draw_bad(rng);
    }
    return represent_bgb_via_pc(y, o, b);
}

namespace {

template <class F>
const std::vector<Point>& cached(std::map<std::pair<int, int>, std::vector<Point>>& cache, std::mutex& mu, int n,
                                 Point y, F build) {
    Torus t(n);
    const auto key = std::make_pair(n, t.index(y));
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(t.wrap(y))).first;
    return it->second;
}

}  // namespace

const std::vector<Point>& represent_pc_via_nl(int n, Point y) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Point>> cache;
    return cached(cache, mu, n, y, [n](Point y) -> std::vector<Point> {
        if (zero(y)) return {y};
        if (n % 2 == 0 && !Torus::odd(y)) throw std::invalid_argument("PC move must be odd for even n");
        if (is_near_move(n, y)) return {y};
        auto e = ladder_embedding(n, y);
        if (!e) throw VerificationError("no ladder embedding for (" + std::to_string(y.x) + "," + std::to_string(y.y) +
                                        ") at n=" + std::to_string(n));
        return ladder_moves(n, *e);
    });
}

const std::vector<Point>& represent_nl_via_loyd(int n, Point y) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Point>> cache;
    return cached(cache, mu, n, y, [n](Point y) -> std::vector<Point> {
        if (zero(y)) return {y};
        if (!is_near_move(n, y)) throw std::invalid_argument("NL move must have L1 length 1 or 3");
        Torus t(n);
        auto rep = [n](int v) { return v <= n / 2 ? v : v - n; };
        const Point d{rep(y.x), rep(y.y)};
        if (std::abs(d.x) + std::abs(d.y) == 1) return {y};
        WindowTask task;
        if (std::abs(d.x) <= 2 && std::abs(d.y) <= 2) {
            task.width = task.height = 3;
        } else if (d.y == 0) {
            task.width = 4;
            task.height = 2;
        } else {
            task.width = 2;
            task.height = 4;
        }
        const Point origin{std::min(0, d.x), std::min(0, d.y)};
        task.hole = {-origin.x, -origin.y};
        task.target = {d.x - origin.x, d.y - origin.y};
        std::vector<Point> out;
        for (Point s : solve_window_swap(task).steps) out.push_back(t.wrap(s));
        return out;
    });
}

std::vector<Point> represent_hc_via_loyd(int n, Point y) {
    if (n % 2 == 0) throw std::invalid_argument("HC -> Loyd is for odd n; use the PC pipeline for even n");
    std::vector<Point> out;
    for (Point z : represent_pc_via_nl(n, y)) {
        const auto& part = represent_nl_via_loyd(n, z);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Point> represent_pc_via_loyd(int n, Point y) {
    if (n % 2 != 0) throw std::invalid_argument("PC -> Loyd needs even n");
    std::vector<Point> out;
    for (Point z : represent_pc_via_nl(n, y)) {
        const auto& part = represent_nl_via_loyd(n, z);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

LayerSample sample_and_check(Layer layer, int n, Rng& rng, const ChainOptions& opts) {
    LayerSample s;
    if (layer == Layer::rt_hc) {
        const int m = n * n;
        const Transposition tr = sample_rt(m, opts.holding, rng);
        const LabelString rep = represent_rt_via_hc(m, tr, opts.holding);
        s.source = "(" + std::to_string(tr.a) + "," + std::to_string(tr.b) + ")";
        for (auto z : rep) {
            s.target += "(" + std::to_string(z.a) + "," + std::to_string(z.b) + ")";
            if (z.a != 0) s.ok = false;  // every factor must involve the hole
        }
        s.length = rep.size();
        s.ok = s.ok && evaluate_labels(m, rep) == evaluate_labels(m, {tr});
        return s;
    }
    const ChainTag src = source_chain(layer);
    MoveDistribution source(src, n, opts);
    const MoveString y = source.sample(rng);
    s.source = to_string(y);
    Representation rep{n, {}};
    bool legal = true;
    switch (layer) {
        case Layer::or_bgb: {
            MoveDistribution bgb(ChainTag::bgb, n, opts);
            rep = represent_or_via_bgb(y, bgb, rng);
            for (const auto& f : rep.factors) {
                const auto& mv = f.moves;
                if (mv.size() == 1) legal = legal && !bad(n, mv[0]);
                else if (mv.size() == 2) legal = legal && bad(n, mv[0]) && bad(n, mv[1]);
                else legal = legal && mv.size() == 3 && bad(n, mv[0]) && !bad(n, mv[1]) && bad(n, mv[2]);
            }
            const std::size_t expect = y.moves.size() <= 2 ? 1 : y.moves.size() - 2;
            legal = legal && rep.length() == expect;
            break;
        }
        case Layer::bgb_pc: {
            MoveDistribution bgb(ChainTag::bgb, n, opts);
            rep = represent_bgb_via_pc(y, bgb, rng);
            for (const auto& f : rep.factors) legal = legal && (zero(f.moves[0]) || Torus::odd(f.moves[0]));
            legal = legal && rep.length() <= 14;
            break;
        }
        case Layer::pc_nl:
            rep = singletons(n, represent_pc_via_nl(n, y.moves[0]));
            for (const auto& f : rep.factors) legal = legal && (zero(f.moves[0]) || is_near_move(n, f.moves[0]));
            break;
        case Layer::nl_loyd:
        case Layer::hc_loyd: {
            rep = singletons(n, layer == Layer::nl_loyd ? represent_nl_via_loyd(n, y.moves[0])
                                                        : represent_hc_via_loyd(n, y.moves[0]));
            Torus t(n);
            for (const auto& f : rep.factors) legal = legal && t.l1(f.moves[0]) <= 1;
            break;
        }
        default: break;
    }
    const MoveString flat = flatten(rep);
    s.target = to_string(flat);
    s.length = rep.length();
    s.ok = legal && evaluate(flat) == evaluate(y);
    return s;
}

}  // namespace loyd
