#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>

namespace loyd {

std::uint64_t splitmix64(std::uint64_t x);
// seed_i = hash(master, i)
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i);

// mt19937_64 plus our own bounded/real draws so streams are identical on every
// standard library.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed, std::string name = "rng")
        : seed_(seed), name_(std::move(name)), engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform on [0, bound), Lemire's multiply-shift with rejection
    std::uint64_t below(std::uint64_t bound);
    int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
    // uniform on [0,1) with 53 bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool coin() { return (next() >> 63) != 0; }

    template <class T>
    void shuffle(std::span<T> v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
    }

    Rng split(std::uint64_t i, const std::string& child) const {
        return Rng(derive_seed(seed_, i), name_ + "/" + child);
    }

    std::uint64_t seed() const { return seed_; }
    const std::string& name() const { return name_; }

private:
    std::uint64_t seed_;
    std::string name_;
    std::mt19937_64 engine_;
};

}  // namespace loyd
