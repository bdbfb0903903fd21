#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "loyd/group.hpp"
#include "loyd/rng.hpp"

namespace loyd {

enum class ChainTag { loyd, hc, rt, pc, or_chain, bgb, nl };

std::string to_string(ChainTag t);
ChainTag chain_from_string(const std::string& s);

// Whether a holding step inside the OR construction is one of the y's (as the
// good move 0) or is drawn once, outside it.
enum class OrHolding { counted, skipped };

std::string to_string(OrHolding h);
OrHolding or_holding_from_string(const std::string& s);

using StringKey = std::vector<int>;  // torus indices of the generators
StringKey key_of(const MoveString& s);
MoveString string_of(int n, const StringKey& k);

// string -> probability, duplicates merged
using Support = std::map<StringKey, double>;

// Point sets used by the chains.
std::vector<Point> nonzero_points(int n);
std::vector<Point> odd_points(int n);
std::vector<Point> bad_points(int n);
std::vector<Point> good_points(int n);  // odd ones plus the origin
std::vector<Point> near_points(int n);  // torus L1 in {1,3}
bool is_near_move(int n, Point y);

struct ChainOptions {
    bool holding = true;
    OrHolding or_holding = OrHolding::counted;
    std::uint64_t or_cap = 1'000'000;
};

class MoveDistribution {
public:
    MoveDistribution(ChainTag tag, int n, ChainOptions opts = {});

    ChainTag tag() const { return tag_; }
    int n() const { return n_; }
    const ChainOptions& options() const { return opts_; }

    bool enumerable() const { return tag_ != ChainTag::or_chain && tag_ != ChainTag::rt; }
    // exact support; throws for OR and RT
    Support support() const;
    MoveString sample(Rng& rng) const;

    // uniform draws used by samplers and by the representations
    Point draw_bad(Rng& rng) const;
    Point draw_good(Rng& rng) const;
    Point draw_odd(Rng& rng) const;

private:
    MoveString sample_or(Rng& rng) const;

    ChainTag tag_;
    int n_;
    ChainOptions opts_;
    std::vector<Point> nonzero_, odd_, bad_, good_, near_;
};

// Thrown when the OR construction runs past its cap.
class CappedSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// inverse string: reversed, each generator negated
MoveString inverse_string(const MoveString& s);
// p(s) == p(s^-1) for every s in the support
bool is_symmetric(const Support& sup, int n, double tol = 1e-15);

// --- symmetric-group presentation used for random transpositions ---------
// A state maps position -> label; a move (a,b) swaps labels a and b.
// a == b is the holding move.
struct Transposition {
    int a = 0;
    int b = 0;
    friend bool operator==(Transposition, Transposition) = default;
};

using LabelString = std::vector<Transposition>;

// product of the string as a permutation of labels, applied left to right
std::vector<int> evaluate_labels(int m, const LabelString& s);
Transposition sample_rt(int m, bool holding, Rng& rng);
Transposition sample_hc_labels(int m, bool holding, Rng& rng);

}  // namespace loyd
