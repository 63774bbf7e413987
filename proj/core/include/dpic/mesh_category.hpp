#ifndef DPIC_MESH_CATEGORY_HPP
#define DPIC_MESH_CATEGORY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dpic/translation_quiver.hpp"

namespace dpic {

// A path is a sequence of window arrow indices, composed left to right. The
// empty path at a vertex is the identity.
using Path = std::vector<std::size_t>;

struct PathSpace {
  ZVertex from;
  ZVertex to;
  std::vector<Path> basis;  // depth-first, canonical arrow order
  std::size_t dimension() const { return basis.size(); }
};

struct HomSpace {
  ZVertex from;
  ZVertex to;
  std::size_t path_count = 0;
  std::size_t relation_rank = 0;
  std::size_t dimension = 0;
  std::vector<Path> quotient_basis;  // paths whose residues form a basis
};

// Throws RangeError when either vertex is outside the window.
PathSpace path_space(const ZQuiverWindow& w, ZVertex v, ZVertex u);

// The smallest window around v and u that satisfies the hom_dim margin.
ZQuiverWindow hom_window(const Quiver& delta, ZVertex v, ZVertex u);

// Hom(v, u) in the mesh category over the rationals. Requires a margin of one
// level on each side of [level(v), level(u)]; throws InsufficientWindow
// otherwise.
HomSpace hom_space(const ZQuiverWindow& w, ZVertex v, ZVertex u);
std::size_t hom_dim(const ZQuiverWindow& w, ZVertex v, ZVertex u);

// Works on Z × ZΔ directly: zero between distinct components, otherwise
// computed on hom_window.
std::size_t hom_dim(const Quiver& delta, ZVertex v, ZVertex u);

// An integer combination of paths v -> u.
using PathCombination = std::vector<std::pair<Path, long long>>;

// Whether the combination lies in the mesh ideal. Same margin rule as hom_dim.
bool is_zero_in_hom(const ZQuiverWindow& w, ZVertex v, ZVertex u, const PathCombination& element);

// Σ β α over the arrow pairs of a mesh, as paths start -> end.
PathCombination mesh_element(const Mesh& mesh);

struct MeshNilpotenceReport {
  std::size_t meshes_checked = 0;
  std::size_t composites_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For every mesh with a margin inside the window: the mesh element is zero,
// and so is its composite with each quotient-basis path into its start from
// the previous level.
MeshNilpotenceReport verify_mesh_nilpotence(const ZQuiverWindow& w);

}  // namespace dpic

#endif  // DPIC_MESH_CATEGORY_HPP
