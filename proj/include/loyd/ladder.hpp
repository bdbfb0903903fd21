#pragma once

#include <array>
#include <optional>
#include <vector>

#include "loyd/torus.hpp"

namespace loyd {

// Hole swap on a 2 x (q+1) ladder.  Bottom row cells a_0..a_q, top row
// b_0..b_q; the hole starts at a_0 and the tile to swap sits at b_q.
// Directions are ladder-local: up = a->b, right = column + 1.
// Four phases:
//   1. (up right down right)* until the hole has taken the tile's cell
//   2. left down right
//   3. (up left left down right)* until the tile is at a_0
//   4. (right up) / (right down) alternately until the hole is at b_q
// q must be even and >= 2.  Total length 9q - 3.
std::array<std::vector<Direction>, 4> ladder_phases(int q);

// Ladder cells placed on the torus: every rung and rail step is a move of
// L1 length 1 or 3, a_0 is the origin, b_q is the target.
struct LadderEmbedding {
    int q = 0;
    std::vector<Point> a;  // wrapped torus points
    std::vector<Point> b;
};

// Shortest valid embedding over the representatives of y, if any.
std::optional<LadderEmbedding> ladder_embedding(int n, Point y);

// Replays the ladder phases through the embedding; each hole step becomes the
// torus displacement between the two cells.
std::vector<Point> ladder_moves(int n, const LadderEmbedding& e);

}  // namespace loyd
