#pragma once

#include <cstddef>
#include <vector>

#include "loyd/torus.hpp"

namespace loyd {

// Sliding puzzle on a bounded width x height block (no wrap).  Finds a
// shortest move sequence that swaps the hole with the tile at `target` and
// leaves every other tile where it was.
struct WindowTask {
    int width = 3;
    int height = 3;
    Point hole;
    Point target;
    friend auto operator<=>(const WindowTask&, const WindowTask&) = default;
};

struct WindowSolution {
    std::vector<Point> steps;  // unit displacements of the hole
    std::size_t states_explored = 0;
};

// Results are cached per task for the life of the process; safe to call from
// several threads.
const WindowSolution& solve_window_swap(const WindowTask& task);

}  // namespace loyd
