#include "loyd/permutation.hpp"

#include <string>

namespace loyd {

void check_bijection(std::span<const int> p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a bijection on {0.." + std::to_string(p.size()) + "-1}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Parity permutation_parity(std::span<const int> p) {
    check_bijection(p);
    std::vector<char> seen(p.size(), 0);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return parity_of(transpositions % 2 == 1);
}

std::vector<int> identity_permutation(int size) {
    std::vector<int> p(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

std::vector<int> inverse(std::span<const int> p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return q;
}

std::vector<int> then(std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t rank_permutation(std::span<const int> p) {
    const int m = static_cast<int>(p.size());
    if (m > 20) throw std::invalid_argument("rank_permutation: size too large");
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < m; ++i) {
        const int v = p[static_cast<std::size_t>(i)];
        // count unused values below v
        const std::uint32_t below = (1u << v) - 1u;
        const int smaller = v - __builtin_popcount(used & below);
        r = r * static_cast<std::uint64_t>(m - i) + static_cast<std::uint64_t>(smaller);
        used |= 1u << v;
    }
    return r;
}

std::vector<int> unrank_permutation(std::uint64_t r, int size) {
    std::vector<int> digits(static_cast<std::size_t>(size));
    for (int i = size - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(size - i);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> p(static_cast<std::size_t>(size));
    std::uint32_t used = 0;
    for (int i = 0; i < size; ++i) {
        int k = digits[static_cast<std::size_t>(i)];
        int v = 0;
        for (;; ++v) {
            if (used & (1u << v)) continue;
            if (k-- == 0) break;
        }
        p[static_cast<std::size_t>(i)] = v;
        used |= 1u << v;
    }
    return p;
}

}  // namespace loyd
