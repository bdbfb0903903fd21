#include "loyd/group.hpp"

#include <sstream>

namespace loyd {

GroupElement identity_element(int n) {
    Torus t(n);
    return {n, {0, 0}, identity_permutation(t.size())};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.n != b.n) throw std::invalid_argument("group product of elements with different n");
    Torus t(a.n);
    GroupElement out{a.n, t.add(a.offset, b.offset), std::vector<int>(a.rel.size())};
    for (std::size_t z = 0; z < a.rel.size(); ++z) out.rel[z] = b.rel[static_cast<std::size_t>(a.rel[z])];
    return out;
}

GroupElement inverse(const GroupElement& a) {
    Torus t(a.n);
    return {a.n, t.neg(a.offset), inverse(std::span<const int>(a.rel))};
}

GroupElement translation_move(int n, Point y) {
    Torus t(n);
    y = t.wrap(y);
    GroupElement g{n, y, std::vector<int>(static_cast<std::size_t>(t.size()))};
    const int yi = t.index(y);
    for (int z = 1; z < t.size(); ++z)
        g.rel[static_cast<std::size_t>(z)] = z == yi ? t.index(t.neg(y)) : t.index(t.sub(t.point(z), y));
    return g;
}

GroupElement element_of(const Configuration& c) {
    const Torus& t = c.torus();
    const Point h = c.hole();
    GroupElement g{c.n(), h, std::vector<int>(static_cast<std::size_t>(t.size()))};
    for (int z = 1; z < t.size(); ++z)
        g.rel[static_cast<std::size_t>(z)] = t.index(t.sub(t.point(c.position_of(z)), h));
    return g;
}

Configuration configuration_of(const GroupElement& g) {
    Torus t(g.n);
    std::vector<int> at(static_cast<std::size_t>(t.size()));
    at[static_cast<std::size_t>(t.index(g.offset))] = 0;
    for (int z = 1; z < t.size(); ++z)
        at[static_cast<std::size_t>(t.index(t.add(g.offset, t.point(g.rel[static_cast<std::size_t>(z)]))))] = z;
    return Configuration::from_layout(g.n, std::move(at));
}

bool in_omega(const GroupElement& g) {
    return permutation_parity(g.rel) == parity_of(Torus::odd(g.offset));
}

MoveClass classify_move(int n, Point y) {
    if (n % 2 != 0) throw std::invalid_argument("good/bad moves are only defined for even n");
    Torus t(n);
    y = t.wrap(y);
    return (Torus::odd(y) || (y.x == 0 && y.y == 0)) ? MoveClass::good : MoveClass::bad;
}

MoveString concat(const MoveString& a, const MoveString& b) {
    if (a.n != b.n) throw std::invalid_argument("concatenating move strings with different n");
    MoveString out = a;
    out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
    return out;
}

void play(Configuration& c, const MoveString& s) {
    if (c.n() != s.n) throw std::invalid_argument("move string n does not match configuration");
    for (Point y : s.moves) c.translate_hole(y);
}

GroupElement evaluate(const MoveString& s) {
    Configuration c = Configuration::solved(s.n);
    play(c, s);
    return element_of(c);
}

GroupElement evaluate_by_product(const MoveString& s) {
    GroupElement g = identity_element(s.n);
    for (Point y : s.moves) g = g * translation_move(s.n, y);
    return g;
}

std::string to_string(const MoveString& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        if (i) os << ' ';
        os << '(' << s.moves[i].x << ',' << s.moves[i].y << ')';
    }
    os << ']';
    return os.str();
}

}  // namespace loyd
