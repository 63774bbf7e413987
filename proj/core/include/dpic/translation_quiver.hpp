#ifndef DPIC_TRANSLATION_QUIVER_HPP
#define DPIC_TRANSLATION_QUIVER_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpic/quiver.hpp"

namespace dpic {

// A vertex (level, base) of ZΔ, tagged with the copy index `component` of
// Z × ZΔ. Component 0 is the copy containing the slice {0} × Δ_0.
struct ZVertex {
  int level = 0;
  VertexIndex base = 0;
  int component = 0;

  auto operator<=>(const ZVertex& other) const {
    if (auto c = component <=> other.component; c != 0) return c;
    if (auto c = level <=> other.level; c != 0) return c;
    return base <=> other.base;
  }
  bool operator==(const ZVertex&) const = default;
};

inline ZVertex tau(ZVertex v) { return {v.level - 1, v.base, v.component}; }
inline ZVertex tau_inv(ZVertex v) { return {v.level + 1, v.base, v.component}; }
inline ZVertex sigma_shift(ZVertex v) { return {v.level, v.base, v.component + 1}; }
inline ZVertex sigma_shift_inv(ZVertex v) { return {v.level, v.base, v.component - 1}; }

// "(n,x)" using the vertex id, or "(m;n,x)" when the component is nonzero.
std::string format_zvertex(const Quiver& delta, ZVertex v);
// Accepts "(n,x)" and "(m;n,x)", whitespace tolerant.
ZVertex parse_zvertex(const Quiver& delta, std::string_view text);

// Number of arrows u -> v in Z × ZΔ. Total function; no window involved.
int z_multiplicity(const Quiver& delta, ZVertex u, ZVertex v);

// (n, α): (n, s(α)) -> (n, t(α)); (n, α*): (n, t(α)) -> (n+1, s(α)).
struct ZArrow {
  int level = 0;
  ArrowIndex arrow = 0;
  bool starred = false;
  int component = 0;
  ZVertex source;
  ZVertex target;

  bool operator==(const ZArrow&) const = default;
};

std::string format_zarrow(const Quiver& delta, const ZArrow& a);

struct MeshMiddle {
  ZVertex vertex;
  std::vector<std::size_t> alphas;  // window arrow indices τ(y) -> x
  std::vector<std::size_t> betas;   // window arrow indices x -> y, betas[j] paired with alphas[j]
};

struct Mesh {
  ZVertex start;  // τ(y)
  ZVertex end;    // y
  std::vector<MeshMiddle> middles;
};

// Levels [first_level, last_level] of one component of Z × ZΔ.
class ZQuiverWindow {
 public:
  ZQuiverWindow(Quiver generator, int first_level, int last_level, int component = 0);

  const Quiver& generator() const { return generator_; }
  int first_level() const { return first_level_; }
  int last_level() const { return last_level_; }
  int component() const { return component_; }

  const std::vector<ZVertex>& vertices() const { return vertices_; }
  const std::vector<ZArrow>& arrows() const { return arrows_; }
  bool contains(ZVertex v) const;
  // Throws RangeError when v is outside the window.
  std::size_t index_of(ZVertex v) const;
  const std::vector<std::size_t>& out_arrows(ZVertex v) const { return out_.at(index_of(v)); }
  const std::vector<std::size_t>& in_arrows(ZVertex v) const { return in_.at(index_of(v)); }
  // Multiplicity computed from the materialized arrow list.
  int multiplicity(ZVertex u, ZVertex v) const;

  // μ(n+1, α) = (n, α*) and μ(n, α*) = (n, α). Throws RangeError when the image
  // arrow is not in the window.
  std::size_t polarization(std::size_t arrow_index) const;
  std::optional<std::size_t> find_arrow(int level, ArrowIndex arrow, bool starred) const;

  // One mesh for each y whose τ(y) lies in the window.
  std::vector<Mesh> meshes() const;

  ZQuiverWindow restrict_to(int first_level, int last_level) const;

 private:
  Quiver generator_;
  int first_level_ = 0;
  int last_level_ = 0;
  int component_ = 0;
  std::vector<ZVertex> vertices_;
  std::vector<ZArrow> arrows_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<std::tuple<int, ArrowIndex, bool>, std::size_t> arrow_lookup_;
};

// Throws InputError for a > b and UnsupportedInput for oriented cycles.
ZQuiverWindow build_window(const Quiver& delta, int a, int b, int component = 0);

// ---------------------------------------------------------------------------
// τ-commuting vertex bijections.

// A bijection f of (Z × ZΔ)_0 commuting with τ and with the component shift,
// stored by the image of the slice {0} × Δ_0 in component 0:
//   f(m; n, x) = (m + c; n + ℓ(x), π(x)) where image[x] = (ℓ(x), π(x), c).
class SliceMap {
 public:
  SliceMap() = default;
  explicit SliceMap(std::vector<ZVertex> image);

  static SliceMap identity(std::size_t n);
  static SliceMap tau_power(std::size_t n, int k);    // τ^k
  static SliceMap sigma_shift(std::size_t n, int k);  // component shift by k
  static SliceMap from_permutation(const VertexPermutation& pi);

  const std::vector<ZVertex>& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  int component_shift() const { return image_.empty() ? 0 : image_[0].component; }
  VertexPermutation base_permutation() const;

  ZVertex operator()(ZVertex v) const;
  SliceMap compose(const SliceMap& inner) const;  // this ∘ inner
  SliceMap inverse() const;
  SliceMap power(int k) const;
  bool is_identity() const;
  // Level-preserving and component-preserving, i.e. induced by Aut(Δ_0; d).
  bool is_twist() const;
  // deg(τ) = 1; returns the numerator over size(): -Σ ℓ(x).
  int degree_numerator() const;
  // Multiplies by a power of τ so that the first slice vertex lands at level 0.
  SliceMap normalized() const;
  int normalization_shift() const { return image_.empty() ? 0 : image_[0].level; }

  auto operator<=>(const SliceMap&) const = default;

 private:
  std::vector<ZVertex> image_;
};

std::string format_slice_map(const Quiver& delta, const SliceMap& f);

// Exact check on all of Z × ZΔ, using that d only depends on the pair of
// τ-orbits and the level offset.
bool preserves_z_multiplicity(const Quiver& delta, const SliceMap& f);
// The same check restricted to pairs of vertices of `window`, with images
// evaluated through z_multiplicity.
bool validate_on_window(const SliceMap& f, const ZQuiverWindow& window);

struct SliceGroup {
  Quiver delta;
  int radius = 0;
  // One representative per coset of <τ>, normalized (first slice vertex at
  // level 0), sorted lexicographically by slice image.
  std::vector<SliceMap> cosets;
  // The elements of finite order; a subgroup.
  std::vector<SliceMap> torsion;
  std::vector<SliceMap> torsion_generators;
  bool torsion_is_twists = false;  // every torsion element comes from Aut(Δ_0; d)
  // Degrees of elements form (1/D)Z with D = degree_denominator.
  int degree_denominator = 1;
  // An element of degree 1/D, chosen to satisfy fractional^D = τ when possible
  // and to commute with the torsion when possible.
  SliceMap fractional;
  bool fractional_power_is_tau = false;
  bool fractional_is_central = false;
  std::vector<std::string> relations;

  std::size_t torsion_order() const { return torsion.size(); }
  // Canonical representative of g·<τ>, or nullopt if g is not in the group.
  std::optional<std::size_t> coset_of(const SliceMap& g) const;
};

int default_search_radius(const Quiver& delta);

// Enumerates Aut((ZΔ)_0; d)^<τ> modulo <τ>: candidate slice images with the
// first vertex at level 0 and all levels within [-radius, radius], validated on
// a window of width 2·radius + 4. Throws InsufficientWindow when
// radius < diameter(Δ) + 1.
SliceGroup aut_commuting_with_tau(const Quiver& delta, std::optional<int> radius = std::nullopt);

// Subgroup of G/<τ> generated by the given elements, as coset indices.
std::vector<std::size_t> generated_cosets(const SliceGroup& group, const std::vector<SliceMap>& gens);

}  // namespace dpic

#endif  // DPIC_TRANSLATION_QUIVER_HPP
