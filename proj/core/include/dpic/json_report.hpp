#ifndef DPIC_JSON_REPORT_HPP
#define DPIC_JSON_REPORT_HPP

#include <nlohmann/json.hpp>

#include "dpic/dpic_groups.hpp"
#include "dpic/int_matrix.hpp"
#include "dpic/k_theory.hpp"
#include "dpic/knitting.hpp"
#include "dpic/mesh_category.hpp"
#include "dpic/quiver.hpp"
#include "dpic/translation_quiver.hpp"

namespace dpic {

// Bumped whenever a field is renamed or removed.
inline constexpr int kJsonSchemaVersion = 1;

nlohmann::json to_json(const GraphType& t);
nlohmann::json to_json(const Quiver& q);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const Quiver& delta, const SliceMap& f);
nlohmann::json to_json(const ZQuiverWindow& w);
nlohmann::json to_json(const ARQuiverModA& mod);
nlohmann::json to_json(const Quiver& delta, const HomSpace& h, const ZQuiverWindow& w);
nlohmann::json to_json(const SigmaNormalForm& nf);
nlohmann::json to_json(const SliceGroup& g);
nlohmann::json to_json(const SymbolicFactor& f);
nlohmann::json to_json(const GroupPresentation& p);
nlohmann::json to_json(const WeylGroupReport& r);
nlohmann::json to_json(const Orientation& o);
nlohmann::json to_json(const GroupoidWalk& w);

}  // namespace dpic

#endif  // DPIC_JSON_REPORT_HPP
