#ifndef DPIC_TESTS_MODULE_ORACLE_HPP
#define DPIC_TESTS_MODULE_ORACLE_HPP

// Hom spaces between explicit representations, solved as a linear system
// over the rationals. Shares no code with the mesh-category implementation.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Q = boost::rational<long long>;
using Matrix = std::vector<std::vector<Q>>;  // row-major

struct Rep {
  // Arrows as (source, target) over vertices 0..n-1.
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;  // maps[a] has dims[target] rows, dims[source] columns
};

// Representation of the opposite of a quiver given by its arrows: each
// arrow x -> y becomes a map M_y -> M_x. Thin: k or 0 at each vertex,
// identity between supported vertices.
Rep thin_rep_of_opposite(const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                         const std::vector<int>& dimvec);

std::size_t rank(Matrix m);

// dim Hom(M, N): families f_v: M_v -> N_v with N_a f_s = f_t M_a.
std::size_t hom_dimension(const Rep& m, const Rep& n);

}  // namespace oracle

#endif
