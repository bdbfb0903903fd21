#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loyd/permutation.hpp"
#include "loyd/torus.hpp"

namespace loyd {

// Labels are the solved positions: tile k starts at torus index k, the hole is
// label 0 and starts at the origin.
class Configuration {
public:
    static constexpr int hole_label = 0;

    static Configuration solved(int n);
    // at[pos] = label, row-major; throws unless a bijection
    static Configuration from_layout(int n, std::vector<int> at);
    static Configuration from_json(const std::string& text);

    int n() const { return torus_.n(); }
    const Torus& torus() const { return torus_; }
    int size() const { return torus_.size(); }

    int at(int pos) const { return at_[static_cast<std::size_t>(pos)]; }
    int position_of(int label) const { return pos_of_[static_cast<std::size_t>(label)]; }
    Point hole() const { return torus_.point(pos_of_[0]); }
    const std::vector<int>& layout() const { return at_; }
    const std::vector<int>& positions() const { return pos_of_; }

    // swap the hole with the tile at hole + y
    void translate_hole(Point y);
    void apply_move(Direction d) { translate_hole(step(d)); }
    // swap the contents of two positions, whatever they hold
    void swap_positions(int p, int q);

    Parity parity() const { return permutation_parity(pos_of_); }
    bool in_omega() const;

    std::string to_json() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.n() == b.n() && a.at_ == b.at_;
    }

private:
    Configuration(int n, std::vector<int> at);
    Torus torus_;
    std::vector<int> at_;
    std::vector<int> pos_of_;
};

Configuration apply_move(Configuration c, Direction d);
bool in_omega(const Configuration& c);

struct ReachableReport {
    std::uint64_t count = 0;
    std::uint64_t omega_size = 0;
    bool equals_omega = false;       // n even
    bool equals_everything = false;  // n odd
    bool stayed_in_start_class = true;
};

// Exhaustive BFS; n must be 2 or 3.
ReachableReport reachable_set(const Configuration& start);

}  // namespace loyd
