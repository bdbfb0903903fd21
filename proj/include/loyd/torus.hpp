#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace loyd {

struct Point {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(Point, Point) = default;
};

// Z_n x Z_n.  Index of (x,y) is x + n*y, so the origin is index 0.
class Torus {
public:
    explicit Torus(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("torus side must be >= 2, got " + std::to_string(n));
    }

    int n() const { return n_; }
    int size() const { return n_ * n_; }

    int wrap(int v) const {
        int r = v % n_;
        return r < 0 ? r + n_ : r;
    }
    Point wrap(Point p) const { return {wrap(p.x), wrap(p.y)}; }
    Point add(Point a, Point b) const { return {wrap(a.x + b.x), wrap(a.y + b.y)}; }
    Point sub(Point a, Point b) const { return {wrap(a.x - b.x), wrap(a.y - b.y)}; }
    Point neg(Point a) const { return {wrap(-a.x), wrap(-a.y)}; }

    int index(Point p) const { return wrap(p.x) + n_ * wrap(p.y); }
    Point point(int idx) const { return {idx % n_, idx / n_}; }

    // |u| = min(u, n-u)
    int abs(int v) const {
        int r = wrap(v);
        return r < n_ - r ? r : n_ - r;
    }
    int l1(Point p) const { return abs(p.x) + abs(p.y); }

    // parity of the representative sum; only meaningful for even n
    static bool odd(Point p) { return ((p.x + p.y) & 1) != 0; }

    bool contains(Point p) const { return p.x >= 0 && p.x < n_ && p.y >= 0 && p.y < n_; }

private:
    int n_;
};

enum class Direction : std::uint8_t { up, down, left, right };

inline constexpr Direction all_directions[4] = {Direction::up, Direction::down, Direction::left,
                                                Direction::right};

inline Point step(Direction d) {
    switch (d) {
        case Direction::up: return {0, 1};
        case Direction::down: return {0, -1};
        case Direction::left: return {-1, 0};
        case Direction::right: return {1, 0};
    }
    return {0, 0};
}

inline Direction opposite(Direction d) {
    switch (d) {
        case Direction::up: return Direction::down;
        case Direction::down: return Direction::up;
        case Direction::left: return Direction::right;
        case Direction::right: return Direction::left;
    }
    return d;
}

inline char symbol(Direction d) {
    switch (d) {
        case Direction::up: return 'U';
        case Direction::down: return 'D';
        case Direction::left: return 'L';
        case Direction::right: return 'R';
    }
    return '?';
}

}  // namespace loyd
