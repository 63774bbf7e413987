#ifndef DPIC_CATALOG_HPP
#define DPIC_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dpic/quiver.hpp"

namespace dpic {

// Builtin quivers with the standard orientations used throughout the
// library. Vertices are named "1".."N".
//
//   A<n>        1 -> 2 -> ... -> n
//   D<n>        1 -> 2, 1 -> 3, 1 -> 4 -> 5 -> ... -> n          (n >= 4)
//   E6/E7/E8    1 -> 2 -> 3 <- 5 <- 6 <- ..., 4 -> 3
//   Dt4         1 -> 2, 1 -> 3, 1 -> 4, 1 -> 5
//   Dt<n>       3 -> 1, 3 -> 2, chain 3 .. n-1 oriented from even to odd
//               labels, n-1 -> n, n-1 -> n+1                      (n >= 5)
//   Et6/Et7/Et8 affine E types
//   Omega<n>    n parallel arrows 1 -> 2                          (n >= 2)
//   T<p>_<q>    1 -> 2 -> ... -> p+1 and 1 -> p+q -> ... -> p+2 -> p+1
Quiver dynkin_a(int n);
Quiver dynkin_d(int n);
Quiver dynkin_e(int n);
Quiver affine_d(int n);
Quiver affine_e(int n);
Quiver omega(int n);
Quiver cycle_t(int p, int q);

// Looks up "A4", "D5", "E8", "Dt6", "Et7", "Omega3", "T3_2" (a leading '@'
// is accepted). Throws InputError for unknown names.
Quiver catalog_quiver(std::string_view name);

// The default catalog: A1-A8, D4-D8, E6-E8, Dt4-Dt8, Et6-Et8,
// Omega2-Omega4 and T<p>_<q> for 1 <= q <= p <= 4.
std::vector<std::string> catalog_names();

}  // namespace dpic

#endif  // DPIC_CATALOG_HPP
