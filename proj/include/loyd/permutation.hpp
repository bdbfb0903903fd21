#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace loyd {

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }
inline Parity parity_of(bool odd) { return odd ? Parity::odd : Parity::even; }

// Throws std::invalid_argument unless p is a bijection on {0..size-1}.
void check_bijection(std::span<const int> p);

// Cycle decomposition: sum of (len-1) mod 2.
Parity permutation_parity(std::span<const int> p);

std::vector<int> identity_permutation(int size);
std::vector<int> inverse(std::span<const int> p);
// (p then q): result[i] = q[p[i]]
std::vector<int> then(std::span<const int> p, std::span<const int> q);

// Lehmer rank in [0, size!).  size <= 12.
std::uint64_t rank_permutation(std::span<const int> p);
std::vector<int> unrank_permutation(std::uint64_t r, int size);
std::uint64_t factorial(int k);

}  // namespace loyd
