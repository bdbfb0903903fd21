#include "loyd/configuration.hpp"

#include <cmath>
#include <deque>
#include <unordered_set>

#include <json.hpp>

#include "loyd/errors.hpp"

namespace loyd {

Configuration::Configuration(int n, std::vector<int> at) : torus_(n), at_(std::move(at)) {
    if (static_cast<int>(at_.size()) != torus_.size())
        throw std::invalid_argument("layout has " + std::to_string(at_.size()) + " cells, expected " +
                                    std::to_string(torus_.size()));
    check_bijection(at_);
    pos_of_ = inverse(at_);
}

Configuration Configuration::solved(int n) { return Configuration(n, identity_permutation(n * n)); }

Configuration Configuration::from_layout(int n, std::vector<int> at) { return Configuration(n, std::move(at)); }

Configuration Configuration::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("configuration JSON must be an array");
    std::vector<int> at = j.get<std::vector<int>>();
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(at.size()))));
    if (n * n != static_cast<int>(at.size())) throw std::invalid_argument("configuration length is not a square");
    return Configuration(n, std::move(at));
}

std::string Configuration::to_json() const { return nlohmann::json(at_).dump(); }

void Configuration::swap_positions(int p, int q) {
    const int a = at_[static_cast<std::size_t>(p)];
    const int b = at_[static_cast<std::size_t>(q)];
    at_[static_cast<std::size_t>(p)] = b;
    at_[static_cast<std::size_t>(q)] = a;
    pos_of_[static_cast<std::size_t>(a)] = q;
    pos_of_[static_cast<std::size_t>(b)] = p;
}

void Configuration::translate_hole(Point y) {
    const int h = pos_of_[0];
    swap_positions(h, torus_.index(torus_.add(torus_.point(h), y)));
}

bool Configuration::in_omega() const {
    // translations of Z_n^2 are even, so only the raw parity matters
    return parity() == parity_of(Torus::odd(hole()));
}

Configuration apply_move(Configuration c, Direction d) {
    c.apply_move(d);
    return c;
}

bool in_omega(const Configuration& c) { return c.in_omega(); }

ReachableReport reachable_set(const Configuration& start) {
    const int n = start.n();
    if (n > 3) throw CapacityError("reachable_set: exhaustive search only for n <= 3, got " + std::to_string(n));
    const int m = n * n;
    const bool start_class = start.in_omega();

    std::vector<char> seen(factorial(m), 0);
    std::deque<std::vector<int>> queue;
    seen[rank_permutation(start.layout())] = 1;
    queue.push_back(start.layout());
    ReachableReport rep;
    rep.count = 1;
    while (!queue.empty()) {
        auto at = std::move(queue.front());
        queue.pop_front();
        const Configuration c = Configuration::from_layout(n, at);
        if (c.in_omega() != start_class) rep.stayed_in_start_class = false;
        for (Direction d : all_directions) {
            const Configuration next = apply_move(c, d);
            auto r = rank_permutation(next.layout());
            if (seen[r]) continue;
            seen[r] = 1;
            ++rep.count;
            queue.push_back(next.layout());
        }
    }
    const std::uint64_t total = factorial(m);
    rep.omega_size = n % 2 == 0 ? total / 2 : total;
    rep.equals_omega = n % 2 == 0 && start_class && rep.count == rep.omega_size && rep.stayed_in_start_class;
    rep.equals_everything = n % 2 == 1 && rep.count == total;
    return rep;
}

}  // namespace loyd
