#include "loyd/chains.hpp"

#include <algorithm>
#include <cmath>

namespace loyd {

std::string to_string(ChainTag t) {
    switch (t) {
        case ChainTag::loyd: return "loyd";
        case ChainTag::hc: return "hc";
        case ChainTag::rt: return "rt";
        case ChainTag::pc: return "pc";
        case ChainTag::or_chain: return "or";
        case ChainTag::bgb: return "bgb";
        case ChainTag::nl: return "nl";
    }
    return "?";
}

ChainTag chain_from_string(const std::string& s) {
    for (ChainTag t : {ChainTag::loyd, ChainTag::hc, ChainTag::rt, ChainTag::pc, ChainTag::or_chain,
                       ChainTag::bgb, ChainTag::nl})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown chain '" + s + "'");
}

std::string to_string(OrHolding h) { return h == OrHolding::counted ? "counted" : "skipped"; }

OrHolding or_holding_from_string(const std::string& s) {
    if (s == "counted") return OrHolding::counted;
    if (s == "skipped") return OrHolding::skipped;
    throw std::invalid_argument("or_holding must be 'counted' or 'skipped', got '" + s + "'");
}

StringKey key_of(const MoveString& s) {
    Torus t(s.n);
    StringKey k;
    k.reserve(s.moves.size());
    for (Point y : s.moves) k.push_back(t.index(y));
    return k;
}

MoveString string_of(int n, const StringKey& k) {
    Torus t(n);
    MoveString s{n, {}};
    for (int i : k) s.moves.push_back(t.point(i));
    return s;
}

namespace {

template <class Pred>
std::vector<Point> points_where(int n, Pred pred) {
    Torus t(n);
    std::vector<Point> out;
    for (int i = 0; i < t.size(); ++i)
        if (pred(t, t.point(i))) out.push_back(t.point(i));
    return out;
}

bool is_zero(Point p) { return p.x == 0 && p.y == 0; }

void require_even(int n, const char* what) {
    if (n % 2 != 0) throw std::invalid_argument(std::string(what) + " needs even n, got " + std::to_string(n));
}

}  // namespace

std::vector<Point> nonzero_points(int n) {
    return points_where(n, [](const Torus&, Point p) { return !is_zero(p); });
}
std::vector<Point> odd_points(int n) {
    require_even(n, "odd_points");
    return points_where(n, [](const Torus&, Point p) { return Torus::odd(p); });
}
std::vector<Point> bad_points(int n) {
    require_even(n, "bad_points");
    return points_where(n, [](const Torus&, Point p) { return !Torus::odd(p) && !is_zero(p); });
}
std::vector<Point> good_points(int n) {
    require_even(n, "good_points");
    return points_where(n, [](const Torus&, Point p) { return Torus::odd(p) || is_zero(p); });
}
std::vector<Point> near_points(int n) {
    return points_where(n, [](const Torus& t, Point p) { return t.l1(p) == 1 || t.l1(p) == 3; });
}
bool is_near_move(int n, Point y) {
    Torus t(n);
    return t.l1(y) == 1 || t.l1(y) == 3;
}

MoveDistribution::MoveDistribution(ChainTag tag, int n, ChainOptions opts)
    : tag_(tag), n_(n), opts_(opts), nonzero_(nonzero_points(n)), near_(near_points(n)) {
    if (n % 2 == 0) {
        odd_ = odd_points(n);
        bad_ = bad_points(n);
        good_ = good_points(n);
    } else if (tag == ChainTag::pc || tag == ChainTag::or_chain || tag == ChainTag::bgb) {
        require_even(n, ("chain " + to_string(tag)).c_str());
    }
    if (opts_.or_cap == 0) throw std::invalid_argument("or_cap must be positive");
}

Point MoveDistribution::draw_bad(Rng& rng) const { return bad_[static_cast<std::size_t>(rng.below(bad_.size()))]; }
Point MoveDistribution::draw_good(Rng& rng) const { return good_[static_cast<std::size_t>(rng.below(good_.size()))]; }
Point MoveDistribution::draw_odd(Rng& rng) const { return odd_[static_cast<std::size_t>(rng.below(odd_.size()))]; }

Support MoveDistribution::support() const {
    if (!enumerable()) throw std::invalid_argument("chain " + to_string(tag_) + " has no finite enumerated support here");
    Torus t(n_);
    Support sup;
    const double move_mass = opts_.holding ? 0.5 : 1.0;
    if (opts_.holding) sup[{0}] += 0.5;
    auto uniform_points = [&](const std::vector<Point>& pts) {
        for (Point p : pts) sup[{t.index(p)}] += move_mass / static_cast<double>(pts.size());
    };
    switch (tag_) {
        case ChainTag::loyd:
            for (Direction d : all_directions) sup[{t.index(t.wrap(step(d)))}] += move_mass / 4.0;
            break;
        case ChainTag::hc: uniform_points(nonzero_); break;
        case ChainTag::pc: uniform_points(odd_); break;
        case ChainTag::nl: uniform_points(near_); break;
        case ChainTag::bgb: {
            const double form = move_mass / 3.0;
            const auto nb = static_cast<double>(bad_.size());
            const auto ng = static_cast<double>(good_.size());
            for (Point g : good_) sup[{t.index(g)}] += form / ng;
            for (Point b1 : bad_)
                for (Point b2 : bad_) {
                    sup[{t.index(b1), t.index(b2)}] += form / (nb * nb);
                    for (Point g : good_) sup[{t.index(b1), t.index(g), t.index(b2)}] += form / (nb * nb * ng);
                }
            break;
        }
        default: break;
    }
    return sup;
}

MoveString MoveDistribution::sample(Rng& rng) const {
    if (tag_ == ChainTag::or_chain) return sample_or(rng);
    if (tag_ == ChainTag::rt) throw std::invalid_argument("random transpositions live on the symmetric group; use sample_rt");
    MoveString s{n_, {}};
    if (opts_.holding && rng.coin()) {
        s.moves.push_back({0, 0});
        return s;
    }
    auto pick = [&](const std::vector<Point>& pts) { return pts[static_cast<std::size_t>(rng.below(pts.size()))]; };
    switch (tag_) {
        case ChainTag::loyd: s.moves.push_back(step(all_directions[rng.below(4)])); break;
        case ChainTag::hc: s.moves.push_back(pick(nonzero_)); break;
        case ChainTag::pc: s.moves.push_back(pick(odd_)); break;
        case ChainTag::nl: s.moves.push_back(pick(near_)); break;
        case ChainTag::bgb:
            switch (rng.below(3)) {
                case 0: s.moves = {draw_good(rng)}; break;
                case 1: {
                    const Point b1 = draw_bad(rng);
                    s.moves = {b1, draw_bad(rng)};
                    break;
                }
                default: {
                    const Point b1 = draw_bad(rng);
                    const Point g = draw_good(rng);
                    s.moves = {b1, g, draw_bad(rng)};
                }
            }
            break;
        default: break;
    }
    Torus t(n_);
    for (Point& p : s.moves) p = t.wrap(p);
    return s;
}

MoveString MoveDistribution::sample_or(Rng& rng) const {
    MoveString s{n_, {}};
    const bool inner_lazy = opts_.holding && opts_.or_holding == OrHolding::counted;
    if (opts_.holding && opts_.or_holding == OrHolding::skipped && rng.coin()) {
        s.moves.push_back({0, 0});
        return s;
    }
    std::uint64_t bad = 0;
    for (std::uint64_t step_no = 1;; ++step_no) {
        if (step_no > opts_.or_cap)
            throw CappedSampleError("OR construction exceeded cap of " + std::to_string(opts_.or_cap) + " steps");
        Point y{0, 0};
        if (!(inner_lazy && rng.coin())) y = nonzero_[static_cast<std::size_t>(rng.below(nonzero_.size()))];
        s.moves.push_back(y);
        if (classify_move(n_, y) == MoveClass::bad) ++bad;
        if (bad % 2 == 0) return s;
    }
}

MoveString inverse_string(const MoveString& s) {
    Torus t(s.n);
    MoveString out{s.n, {}};
    for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) out.moves.push_back(t.neg(*it));
    return out;
}

bool is_symmetric(const Support& sup, int n, double tol) {
    for (const auto& [k, p] : sup) {
        const auto inv = key_of(inverse_string(string_of(n, k)));
        auto it = sup.find(inv);
        if (it == sup.end() || std::abs(it->second - p) > tol) return false;
    }
    return true;
}

std::vector<int> evaluate_labels(int m, const LabelString& s) {
    // sigma maps label -> label; applying (a,b) after sigma swaps a and b in the image
    std::vector<int> sigma = identity_permutation(m);
    for (Transposition t : s) {
        if (t.a < 0 || t.b < 0 || t.a >= m || t.b >= m) throw std::invalid_argument("transposition label out of range");
        for (int& v : sigma) {
            if (v == t.a) v = t.b;
            else if (v == t.b) v = t.a;
        }
    }
    return sigma;
}

Transposition sample_rt(int m, bool holding, Rng& rng) {
    if (holding && rng.coin()) return {0, 0};
    int a = rng.below(m);
    int b = rng.below(m - 1);
    if (b >= a) ++b;
    return {std::min(a, b), std::max(a, b)};
}

Transposition sample_hc_labels(int m, bool holding, Rng& rng) {
    if (holding && rng.coin()) return {0, 0};
    return {0, 1 + rng.below(m - 1)};
}

}  // namespace loyd
