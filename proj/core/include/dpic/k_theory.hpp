#ifndef DPIC_K_THEORY_HPP
#define DPIC_K_THEORY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpic/int_matrix.hpp"
#include "dpic/quiver.hpp"

namespace dpic {

// C(x, y) = number of paths x -> y. Throws UnsupportedInput on oriented cycles.
IntMatrix cartan(const Quiver& q);

// Coxeter matrix in the projective basis, fixed by Φ[P_x] = -[I_x]:
// Φ = -C^{-1} C^T.
IntMatrix coxeter_matrix(const Quiver& q);

// s_x e_x = -e_x + Σ_{edges {x,y}} e_y, and s_x e_y = e_y for y != x.
IntMatrix reflection(const Quiver& graph, VertexIndex x);
IntMatrix reflection(const Quiver& graph, std::string_view x);

struct WeylGroupReport {
  std::vector<IntMatrix> generators;
  std::size_t elements_found = 0;
  std::size_t bound = 0;
  bool complete = false;  // closure finished within the bound
};

// Closure of {s_x} up to `element_bound` elements.
WeylGroupReport weyl_group(const Quiver& graph, std::size_t element_bound = 1'000'000);

// Positive roots as dimension vectors: the orbit of the simple roots under
// the transposes s_x^T, keeping the nonnegative vectors. Sorted. Throws
// UnsupportedInput when the orbit exceeds `bound` (non-Dynkin graphs).
std::vector<std::vector<std::int64_t>> positive_roots(const Quiver& graph, std::size_t bound = 100'000);

// An orientation of the underlying graph of a quiver, arrows as
// (source, target) vertex index pairs. Arrow ids are kept for round trips.
struct Orientation {
  std::vector<std::string> vertex_ids;
  std::vector<std::string> arrow_ids;
  std::vector<std::pair<VertexIndex, VertexIndex>> arrows;

  static Orientation from_quiver(const Quiver& q);
  Quiver to_quiver(std::string name = {}) const;
  std::size_t vertex_count() const { return vertex_ids.size(); }
  bool is_source(VertexIndex x) const;
  VertexIndex index_of(std::string_view id) const;

  bool operator==(const Orientation&) const = default;
};

// Greedy: repeatedly reflect the smallest-index current source.
std::vector<VertexIndex> source_admissible_ordering(const Orientation& omega);

// Reverses the arrows at a source. Throws PreconditionError otherwise.
Orientation bgp_reflect(const Orientation& omega, VertexIndex x);

struct ReflectionFactorizationReport {
  std::vector<VertexIndex> ordering;
  IntMatrix product;  // s_{x_n} ... s_{x_1}
  IntMatrix coxeter;
  bool factorization_ok = false;
  // Φ^{-1} e_x = s_x e_x at every source x.
  bool source_reflections_ok = false;
  bool ok() const { return factorization_ok && source_reflections_ok; }
};

// The Coxeter matrix is the product of reflections along a source-admissible
// ordering x_1, ..., x_n, taken as s_{x_n} ... s_{x_1}. For 1 -> 2 this is
// s_2 s_1 = [[0,1],[-1,-1]] = Φ, while s_1 s_2 = Φ^{-1}.
ReflectionFactorizationReport verify_reflection_factorization(const Orientation& omega);

struct GroupoidWalk {
  Orientation start;
  std::vector<VertexIndex> word;
  Orientation end;
  IntMatrix accumulated;  // s_{w_k} ... s_{w_1}
  bool closed = false;
  // For closed walks: j with accumulated = Φ_start^j, if one was found.
  std::optional<int> coxeter_exponent;
};

// Throws PreconditionError when a step does not reflect a current source.
GroupoidWalk groupoid_walk(const Orientation& omega, const std::vector<VertexIndex>& word);

// A random tree on n vertices "1".."n" with random edge directions.
Quiver random_tree_orientation(std::size_t n, std::uint64_t seed);

// Φ^m = (-1)^k P_twist, the K_0 image of τ^m = twist σ^{-k}.
bool verify_coxeter_relation(const Quiver& q, int tau_power, int sigma_power,
                             const std::vector<std::size_t>& twist);

}  // namespace dpic

#endif  // DPIC_K_THEORY_HPP
