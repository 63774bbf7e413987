#ifndef DPIC_KNITTING_HPP
#define DPIC_KNITTING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpic/quiver.hpp"
#include "dpic/translation_quiver.hpp"

namespace dpic {

using DimensionVector = std::vector<int>;

// Dimension vectors of indecomposable projectives and injectives:
//   dim(P_x)_y = number of paths y -> x,   dim(I_x)_y = number of paths x -> y.
// With 1 -> 2 this gives P_1 = (1,0) simple projective and P_2 = (1,1).
DimensionVector projective_dimvec(const Quiver& delta, VertexIndex x);
DimensionVector injective_dimvec(const Quiver& delta, VertexIndex x);

// The module category embedded into ZΔ with P_x at (0, x).
struct ARQuiverModA {
  Quiver delta;
  GraphType type;
  std::vector<ZVertex> positions;  // sorted
  std::map<ZVertex, DimensionVector> dimvec;
  std::vector<ZVertex> projective_at;
  std::vector<ZVertex> injective_at;

  bool contains(ZVertex v) const { return dimvec.count(v) != 0; }
  bool is_projective(ZVertex v) const;
  bool is_injective(ZVertex v) const;
  bool is_simple(ZVertex v) const;
  int last_level() const;
};

// Throws UnsupportedInput unless classify(delta) is Dynkin; ConsistencyError
// when the result contradicts the root count or the injective dimvecs.
ARQuiverModA knit(const Quiver& delta);

// σ(0, x) = τ^{-1}(position of I_x).
SliceMap sigma_permutation(const ARQuiverModA& mod);
SliceMap sigma_permutation(const Quiver& delta);

// σ^k = twist ∘ τ^{-m}, i.e. τ^m = twist σ^{-k}.
struct SigmaNormalForm {
  int sigma_power = 1;  // k
  int tau_power = 0;    // m
  VertexPermutation twist;
  bool twisted = false;
  std::string relation;  // "tau^m = sigma^-k" or "tau^m = theta sigma^-k"
  // Smallest k with such a form; differs from sigma_power only for A_1.
  int minimal_sigma_power = 1;
  int minimal_tau_power = 0;
  std::string minimal_relation;
};

std::string format_sigma_relation(int tau_power, int sigma_power, bool twisted);

// Finds the normal form, choosing k = 2 for type A and the minimal k
// otherwise, and verifies it on a window of width 4(m+1).
SigmaNormalForm sigma_normal_form(const Quiver& delta);

}  // namespace dpic

#endif  // DPIC_KNITTING_HPP
