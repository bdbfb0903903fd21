#pragma once

#include <string>
#include <vector>

#include "loyd/configuration.hpp"
#include "loyd/torus.hpp"

namespace loyd {

// (hole offset, permutation of relative tile positions).  rel[z] is where the
// tile that started at relative index z ends up, relative to the hole; rel[0]
// is pinned to 0.
struct GroupElement {
    int n = 2;
    Point offset;
    std::vector<int> rel;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(int n);
// (x,f)(y,g) = (x+y, g o f)
GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
// hole moves by y; tile at y goes to -y, every other z to z-y
GroupElement translation_move(int n, Point y);

// Element describing where a configuration sits relative to the solved one.
GroupElement element_of(const Configuration& c);
Configuration configuration_of(const GroupElement& g);
bool in_omega(const GroupElement& g);

enum class MoveClass { good, bad };
// good iff y odd or zero; n must be even
MoveClass classify_move(int n, Point y);

// A string of translation generators.  (0,0) is the holding generator.
struct MoveString {
    int n = 2;
    std::vector<Point> moves;

    std::size_t size() const { return moves.size(); }
    friend bool operator==(const MoveString&, const MoveString&) = default;
};

MoveString concat(const MoveString& a, const MoveString& b);
// playback on the solved configuration
GroupElement evaluate(const MoveString& s);
// left fold of the product law, used to cross-check evaluate
GroupElement evaluate_by_product(const MoveString& s);
// plays s on c in place
void play(Configuration& c, const MoveString& s);

std::string to_string(const MoveString& s);

}  // namespace loyd
