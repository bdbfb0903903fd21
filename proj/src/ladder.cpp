#include "loyd/ladder.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "loyd/errors.hpp"

namespace loyd {

namespace {

struct LadderState {
    int q;
    std::vector<int> cell;  // label in each cell, index = row * (q+1) + col; 0 is the hole
    int hole_row = 0;
    int hole_col = 0;

    explicit LadderState(int q_) : q(q_), cell(static_cast<std::size_t>(2 * (q_ + 1))) {
        for (std::size_t i = 0; i < cell.size(); ++i) cell[i] = static_cast<int>(i);
    }
    int idx(int r, int c) const { return r * (q + 1) + c; }
    int label(int r, int c) const { return cell[static_cast<std::size_t>(idx(r, c))]; }

    // returns the label the hole swapped with
    int move(Direction d) {
        int r = hole_row, c = hole_col;
        switch (d) {
            case Direction::up: r = 1; break;
            case Direction::down: r = 0; break;
            case Direction::left: --c; break;
            case Direction::right: ++c; break;
        }
        if (c < 0 || c > q || (r == hole_row && c == hole_col))
            throw VerificationError("ladder move leaves the ladder");
        const int other = label(r, c);
        std::swap(cell[static_cast<std::size_t>(idx(r, c))], cell[static_cast<std::size_t>(idx(hole_row, hole_col))]);
        hole_row = r;
        hole_col = c;
        return other;
    }
};

}  // namespace

std::array<std::vector<Direction>, 4> ladder_phases(int q) {
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("ladder width q must be even and >= 2, got " + std::to_string(q));
    using D = Direction;
    LadderState st(q);
    const int target = st.idx(1, q);  // label of the tile to swap
    std::array<std::vector<Direction>, 4> out;
    const std::size_t budget = static_cast<std::size_t>(20 * q + 20);

    auto run = [&](std::vector<Direction>& phase, D d) {
        if (phase.size() > budget) throw VerificationError("ladder phase did not terminate");
        phase.push_back(d);
        return st.move(d);
    };

    // 1
    for (bool done = false; !done;)
        for (D d : {D::up, D::right, D::down, D::right})
            if (run(out[0], d) == target) {
                done = true;
                break;
            }
    // 2
    for (D d : {D::left, D::down, D::right}) run(out[1], d);
    // 3
    while (st.label(0, 0) != target)
        for (D d : {D::up, D::left, D::left, D::down, D::right}) run(out[2], d);
    // 4
    for (bool up = true; !(st.hole_row == 1 && st.hole_col == q); up = !up) {
        run(out[3], D::right);
        run(out[3], up ? D::up : D::down);
    }

    for (int r = 0; r < 2; ++r)
        for (int c = 0; c <= q; ++c) {
            const int want = (r == 0 && c == 0) ? target : (r == 1 && c == q) ? 0 : st.idx(r, c);
            if (st.label(r, c) != want) throw VerificationError("ladder phases did not produce a clean swap");
        }
    return out;
}

namespace {

// Canonical frame: target (t1, t2) with t1 >= t2 >= 0 and t1 + t2 odd.
std::optional<std::pair<std::vector<Point>, std::vector<Point>>> frame_ladder(int t1, int t2) {
    std::vector<Point> a, b;
    if (t2 == 1) {
        for (int c = 0; c <= t1; ++c) {
            a.push_back({c, 0});
            b.push_back({c, 1});
        }
    } else if (t2 == 0) {
        // the last top cell drops onto the target's row, one diagonal step away
        const int q = t1 - 1;
        if (q < 2) return std::nullopt;
        for (int c = 0; c <= q; ++c) {
            a.push_back({c, 0});
            b.push_back(c < q ? Point{c, 1} : Point{t1, 0});
        }
    } else {
        const int rise = t2 - 1;
        const int s1 = rise % 2;
        const int s2 = rise / 2;
        const int h = t1 - (s2 % 2) - 2 * s1;
        if (h < 0) return std::nullopt;
        Point p{0, 0};
        a.push_back(p);
        for (int i = 0; i < h; ++i) a.push_back(p = {p.x + 1, p.y});
        if (s1) a.push_back(p = {p.x + 2, p.y + 1});
        for (int i = 0; i < s2; ++i) a.push_back(p = {p.x + (i % 2 == 0 ? 1 : -1), p.y + 2});
        for (Point x : a) b.push_back({x.x, x.y + 1});
    }
    const int q = static_cast<int>(a.size()) - 1;
    if (q < 2 || q % 2 != 0) return std::nullopt;
    return std::make_pair(std::move(a), std::move(b));
}

bool valid(const Torus& t, const LadderEmbedding& e, Point y) {
    std::set<int> used;
    for (Point p : e.a) used.insert(t.index(p));
    for (Point p : e.b) used.insert(t.index(p));
    if (used.size() != 2 * e.a.size()) return false;
    if (t.index(e.a.front()) != 0 || t.index(e.b.back()) != t.index(y)) return false;
    auto near = [&](Point u, Point v) {
        const int d = t.l1(t.sub(v, u));
        return d == 1 || d == 3;
    };
    for (int c = 0; c <= e.q; ++c) {
        const auto k = static_cast<std::size_t>(c);
        if (!near(e.a[k], e.b[k])) return false;
        if (c < e.q && (!near(e.a[k], e.a[k + 1]) || !near(e.b[k], e.b[k + 1]))) return false;
    }
    return true;
}

}  // namespace

std::optional<LadderEmbedding> ladder_embedding(int n, Point y) {
    Torus t(n);
    y = t.wrap(y);
    std::optional<LadderEmbedding> best;
    for (int an : {0, -n})
        for (int bn : {0, -n}) {
            const int u1 = y.x + an;
            const int u2 = y.y + bn;
            if (((u1 + u2) % 2 + 2) % 2 != 1) continue;
            const bool swap = std::abs(u2) > std::abs(u1);
            const int t1 = std::max(std::abs(u1), std::abs(u2));
            const int t2 = std::min(std::abs(u1), std::abs(u2));
            auto frame = frame_ladder(t1, t2);
            if (!frame) continue;
            const int sx = u1 < 0 ? -1 : 1;
            const int sy = u2 < 0 ? -1 : 1;
            auto place = [&](Point f) {
                Point p = swap ? Point{f.y, f.x} : f;
                return t.wrap(Point{p.x * sx, p.y * sy});
            };
            LadderEmbedding e;
            e.q = static_cast<int>(frame->first.size()) - 1;
            for (Point f : frame->first) e.a.push_back(place(f));
            for (Point f : frame->second) e.b.push_back(place(f));
            if (!valid(t, e, y)) continue;
            if (!best || e.q < best->q) best = std::move(e);
        }
    return best;
}

std::vector<Point> ladder_moves(int n, const LadderEmbedding& e) {
    Torus t(n);
    std::vector<Point> out;
    int r = 0, c = 0;
    auto at = [&](int row, int col) { return row == 0 ? e.a[static_cast<std::size_t>(col)] : e.b[static_cast<std::size_t>(col)]; };
    for (const auto& phase : ladder_phases(e.q))
        for (Direction d : phase) {
            int r2 = r, c2 = c;
            switch (d) {
                case Direction::up: r2 = 1; break;
                case Direction::down: r2 = 0; break;
                case Direction::left: --c2; break;
                case Direction::right: ++c2; break;
            }
            out.push_back(t.sub(at(r2, c2), at(r, c)));
            r = r2;
            c = c2;
        }
    return out;
}

}  // namespace loyd
