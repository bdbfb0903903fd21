#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "loyd/rng.hpp"
#include "loyd/stats.hpp"
#include "loyd/torus.hpp"

namespace loyd {

// Torus minus the origin, with edges (-1,0)-(1,0) and (0,1)-(0,-1) added.
// Vertex v is torus index v+1 ... stored densely as torus index - 1.
class TildeGraph {
public:
    explicit TildeGraph(int n);

    int n() const { return t_.n(); }
    int size() const { return t_.size() - 1; }
    const Torus& torus() const { return t_; }
    int vertex(Point p) const;  // throws for the origin
    Point point(int v) const { return t_.point(v + 1); }
    // neighbour in direction d, one per edge instance
    int neighbour(int v, Direction d) const { return adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)]; }
    int degree(int v) const;  // edge instances, loops excluded

    // distribution one lazy step later: 1/2 stay, 1/8 per edge
    void step(const std::vector<double>& in, std::vector<double>& out) const;

private:
    Torus t_;
    std::vector<std::array<int, 4>> adj_;
};

// The relative position (hole - tile) under the Loyd process, against the
// lazy walk on the graph.
struct RelativeWalkReport {
    std::uint64_t steps = 0;
    std::uint64_t illegal = 0;          // transitions that are not graph moves
    std::uint64_t hit_origin = 0;
    std::array<std::uint64_t, 5> categories{};  // up, down, left, right, hold
    ChiSquare chi;
    double occupation_tv = 0.0;         // Loyd occupation vs simulated graph walk
};
RelativeWalkReport relative_walk_equivalence(int n, std::uint64_t steps, Rng& rng);

struct HeatKernelCurve {
    std::vector<double> m;  // m[t-1] = max_y |p^t(x,y) - 1/|V||, t = 1..t_max
    double a_hat = 0.0;     // max t m(t)
    double max_mass_error = 0.0;
};
HeatKernelCurve heat_kernel_curve(const TildeGraph& g, Point x, std::int64_t t_max);

struct ConductanceProfile {
    std::vector<double> r;    // grid of measures, k / |V|
    std::vector<double> phi;  // smallest boundary ratio with pi(S) <= r
    bool exact = false;
    double c_tilde = 0.0;     // min phi(u) n sqrt(u)
};

// Q(S, S^c) / pi(S)
double boundary_ratio(const TildeGraph& g, const std::vector<int>& set);
// all subsets with pi(S) <= 1/2; n <= 4
ConductanceProfile conductance_exhaustive(const TildeGraph& g);
// annealing over connected sets of each size
ConductanceProfile conductance_annealed(const TildeGraph& g, Rng& rng, int restarts = 8, int sweeps = 4000);

// ceil(1 + integral_{pi_min}^{4/eps} 4 du / (u Phi(u)^2)) for the step profile,
// Phi(u) = Phi(1/2) beyond 1/2.
std::int64_t hk2_sufficient_time(const ConductanceProfile& prof, double pi_min, double eps);
// max_{x,y} |p^t(x,y) - pi(y)| / pi(y), dense
double uniform_ratio_deviation(const TildeGraph& g, std::int64_t t);

}  // namespace loyd
