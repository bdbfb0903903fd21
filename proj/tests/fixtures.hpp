#pragma once

// Frozen constants measured once from the implementation and kept fixed.

namespace fixtures {

// longest pc -> nl string over all odd moves, n in {4,6,8,10}, divided by n
inline constexpr double pc_nl_length_per_n = 4.125;
// longest hc -> loyd string over all moves, n in {3,5,7}, divided by n
inline constexpr double hc_loyd_length_per_n = 13.0;

// pc -> loyd comparison constant over n^2, n in {4,6,8} (4.5, 30.07, 45.81)
inline constexpr double pc_loyd_a_per_n2 = 45.81;

// counts around t/(n^2-1): deviation <= a log t, variance <= c n^-2 t log t
inline constexpr double count_mean_a = 0.6;
inline constexpr double count_var_c = 1.4;

// coupling: P(E)(d+1) for d in {1,2,4,8,16} at n = 64
inline constexpr double coupling_bound = 2.1;

// heat kernel max_t t m(t) over n in {5,8,16,32}
inline constexpr double heat_kernel_a = 0.6563;

}  // namespace fixtures
