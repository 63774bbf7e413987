#ifndef DPIC_REFERENCE_TABLES_HPP
#define DPIC_REFERENCE_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpic/quiver.hpp"

namespace dpic {

// Published values the verification suites compare against. Nothing in the
// library computes from these.

// σ normal form of a Dynkin type, e.g. "tau^5 = sigma^-2" for A_4.
std::optional<std::string> known_sigma_relation(const GraphType& type);

// Order of the finite part of Aut(ZΔ)^<τ> for affine trees.
std::optional<std::size_t> known_torsion_order(const GraphType& type);

// Whether the affine tree type carries a degree 1/2 generator η with η^2 = τ.
bool known_half_translation(const GraphType& type);

// |W(Δ)| for Dynkin types.
std::optional<std::uint64_t> known_weyl_order(const GraphType& type);

// The catalog entries each suite runs over.
std::vector<std::string> finite_type_names();
std::vector<std::string> affine_type_names();

}  // namespace dpic

#endif  // DPIC_REFERENCE_TABLES_HPP
