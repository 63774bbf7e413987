#ifndef DPIC_DPIC_GROUPS_HPP
#define DPIC_DPIC_GROUPS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpic/knitting.hpp"
#include "dpic/quiver.hpp"
#include "dpic/translation_quiver.hpp"

namespace dpic {

// Structured metadata for factors that depend on the ground field.
struct SymbolicFactor {
  enum class Tag {
    Trivial,
    MultiplicativeGroup,        // k^x
    PGL,                        // PGL_n(k)
    UpperTriangular2,           // [[k^x, k], [0, 1]]
    SemidirectByOrder2OnTorus,  // S_2 ⋉ k^x
    FiniteSymmetric,            // S_m
    WreathLike,                 // S_2 ⋉ S_2^2
    FreeAbelian,                // Z^r
    Unknown,
  };
  Tag tag = Tag::Trivial;
  int parameter = 0;  // n for PGL, m for S_m, r for Z^r

  std::string tag_name() const;
  std::string display() const;
  // Symbols a relation word may use for elements of this factor.
  std::vector<std::string> symbols() const;
  bool operator==(const SymbolicFactor&) const = default;
};

SymbolicFactor out0_description(const Quiver& q);

// Element of the combinatorial part: a τ-commuting bijection of Z × ZΔ. In
// infinite type its component shift is the σ-exponent.
struct CombinatorialElement {
  std::shared_ptr<const Quiver> delta;
  SliceMap map;
};

CombinatorialElement element_multiply(const CombinatorialElement& a, const CombinatorialElement& b);
CombinatorialElement element_invert(const CombinatorialElement& a);
// Decided on one τ-period of the slice in one component.
bool element_equal(const CombinatorialElement& a, const CombinatorialElement& b);

struct GroupPresentation {
  std::shared_ptr<const Quiver> delta;
  GraphType type;
  bool finite_type = false;
  std::vector<std::string> generators;
  std::map<std::string, CombinatorialElement> realization;
  std::vector<std::string> relations;
  // Abstract structure of the combinatorial part, e.g. "S_3 x Z".
  std::string combinatorial_identification;
  // The whole group, e.g. "Z x (S_4 x Z)".
  std::string identification;
  std::string torsion_name;
  std::size_t torsion_order = 1;
  int degree_denominator = 1;
  bool fractional_central = true;
  std::vector<SymbolicFactor> factors;
  std::string action;
  std::optional<SigmaNormalForm> sigma_form;  // finite type only
};

GroupPresentation dpic_describe(const Quiver& q);

// Evaluates a word ("tau^5 sigma^2") or a relation ("tau^5 = sigma^-2") and
// reports whether it is the identity. Symbols of symbolic factors throw
// UnsupportedInput; other unknown symbols throw InputError.
bool check_relation(const GroupPresentation& pres, std::string_view word);
CombinatorialElement evaluate_word(const GroupPresentation& pres, std::string_view word);

// (τσ)^{n+1} = σ^{n-1} in type A_n.
bool fractional_cy_check(int n);

// Name of a finite group from its multiplication table shape. `twists` says
// whether all elements are level preserving (so S_2 rather than Z/2Z).
std::string name_finite_group(const std::vector<SliceMap>& elements, bool twists);

struct SubgroupReport {
  std::size_t cosets_reached = 0;
  bool covers_all_cosets = false;
  int tau_exponent = 0;  // smallest e > 0 with τ^e in the subgroup, 0 if none
  bool is_whole_group() const { return covers_all_cosets && tau_exponent == 1; }
};

// Which part of the enumerated group the given elements generate.
SubgroupReport generated_subgroup(const SliceGroup& group, const std::vector<SliceMap>& gens);

// The rotation of the cycle-like quivers Ω_n and T_{p,q} used as the standard
// fractional generator; nullopt for other types.
std::optional<SliceMap> standard_rotation(const Quiver& q);

}  // namespace dpic

#endif  // DPIC_DPIC_GROUPS_HPP
