#include "loyd/window_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "loyd/errors.hpp"

namespace loyd {

namespace {

using State = std::uint64_t;  // 4 bits per cell

State with_swap(State s, int a, int b) {
    const State la = (s >> (4 * a)) & 15u;
    const State lb = (s >> (4 * b)) & 15u;
    s &= ~((State{15} << (4 * a)) | (State{15} << (4 * b)));
    return s | (lb << (4 * a)) | (la << (4 * b));
}

WindowSolution bfs(const WindowTask& task) {
    const int w = task.width;
    const int h = task.height;
    if (w < 1 || h < 1 || w * h > 12) throw std::invalid_argument("window must have between 1 and 12 cells");
    auto inside = [&](Point p) { return p.x >= 0 && p.x < w && p.y >= 0 && p.y < h; };
    if (!inside(task.hole) || !inside(task.target) || task.hole == task.target)
        throw std::invalid_argument("window task needs distinct hole and target cells inside the window");
    auto cell = [&](Point p) { return p.x + w * p.y; };
    const int cells = w * h;

    State start = 0;
    for (int c = 0; c < cells; ++c) start |= State(c) << (4 * c);
    const State goal = with_swap(start, cell(task.hole), cell(task.target));

    struct Parent {
        State prev;
        std::int8_t dir;
    };
    std::unordered_map<State, Parent> parent;
    parent.reserve(1u << 18);
    parent.emplace(start, Parent{start, -1});
    std::deque<std::pair<State, int>> queue{{start, cell(task.hole)}};
    const Point dirs[4] = {{0, 1}, {0, -1}, {-1, 0}, {1, 0}};
    bool found = start == goal;
    while (!queue.empty() && !found) {
        auto [s, hc] = queue.front();
        queue.pop_front();
        const Point hp{hc % w, hc / w};
        for (std::int8_t d = 0; d < 4; ++d) {
            const Point q{hp.x + dirs[d].x, hp.y + dirs[d].y};
            if (!inside(q)) continue;
            const State next = with_swap(s, hc, cell(q));
            if (!parent.emplace(next, Parent{s, d}).second) continue;
            if (next == goal) {
                found = true;
                break;
            }
            queue.emplace_back(next, cell(q));
        }
    }
    if (!found) throw VerificationError("window swap unreachable in " + std::to_string(w) + "x" + std::to_string(h));

    WindowSolution sol;
    sol.states_explored = parent.size();
    for (State s = goal; s != start;) {
        const Parent& p = parent.at(s);
        sol.steps.push_back(dirs[p.dir]);
        s = p.prev;
    }
    std::reverse(sol.steps.begin(), sol.steps.end());
    return sol;
}

}  // namespace

const WindowSolution& solve_window_swap(const WindowTask& task) {
    static std::mutex mu;
    static std::map<WindowTask, WindowSolution> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(task);
    if (it == cache.end()) it = cache.emplace(task, bfs(task)).first;
    return it->second;
}

}  // namespace loyd
