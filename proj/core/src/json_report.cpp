#include "dpic/json_report.hpp"

namespace dpic {

using nlohmann::json;

json to_json(const GraphType& t) {
  json j;
  switch (t.family) {
    case GraphFamily::Dynkin: j["tag"] = "Dynkin"; break;
    case GraphFamily::AffineTree: j["tag"] = "AffineTree"; break;
    case GraphFamily::AffineCycle: j["tag"] = "AffineCycle"; break;
    case GraphFamily::MultiArrow: j["tag"] = "MultiArrow"; break;
    case GraphFamily::Other: j["tag"] = "Other"; break;
  }
  switch (t.family) {
    case GraphFamily::Dynkin:
    case GraphFamily::AffineTree:
      j["family"] = std::string(1, t.series);
      j["n"] = t.n;
      break;
    case GraphFamily::AffineCycle:
      j["family"] = "T";
      j["n"] = t.n;
      j["p"] = t.p;
      j["q"] = t.q;
      break;
    case GraphFamily::MultiArrow:
      j["family"] = "Omega";
      j["n"] = t.n;
      break;
    case GraphFamily::Other: break;
  }
  j["display"] = t.display();
  return j;
}

json to_json(const Quiver& q) {
  json vertices = json::array();
  for (const Vertex& v : q.vertices()) vertices.push_back({{"id", v.id}, {"label", v.label}});
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) {
    arrows.push_back({{"id", a.id},
                      {"source", q.vertex(a.source).id},
                      {"target", q.vertex(a.target).id},
                      {"label", a.label}});
  }
  return {{"name", q.name()}, {"vertices", vertices}, {"arrows", arrows}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Quiver& delta, const SliceMap& f) {
  json j = json::object();
  for (VertexIndex x = 0; x < f.size(); ++x) {
    j[format_zvertex(delta, {0, x, 0})] = format_zvertex(delta, f.image()[x]);
  }
  return j;
}

json to_json(const ZQuiverWindow& w) {
  const Quiver& delta = w.generator();
  json vertices = json::array();
  for (const ZVertex& v : w.vertices()) vertices.push_back(format_zvertex(delta, v));
  json arrows = json::array();
  for (const ZArrow& a : w.arrows()) {
    arrows.push_back({{"name", format_zarrow(delta, a)},
                      {"source", format_zvertex(delta, a.source)},
                      {"target", format_zvertex(delta, a.target)}});
  }
  json meshes = json::array();
  for (const Mesh& m : w.meshes()) {
    json middles = json::array();
    for (const MeshMiddle& mid : m.middles) {
      middles.push_back({{"vertex", format_zvertex(delta, mid.vertex)}, {"arrows", mid.betas.size()}});
    }
    meshes.push_back({{"start", format_zvertex(delta, m.start)},
                      {"end", format_zvertex(delta, m.end)},
                      {"middles", middles}});
  }
  return {{"levels", {w.first_level(), w.last_level()}},
          {"vertices", vertices},
          {"arrows", arrows},
          {"meshes", meshes}};
}

json to_json(const ARQuiverModA& mod) {
  const Quiver& delta = mod.delta;
  json positions = json::array();
  for (const ZVertex& v : mod.positions) {
    json flags = json::array();
    if (mod.is_projective(v)) flags.push_back("P");
    if (mod.is_injective(v)) flags.push_back("I");
    if (mod.is_simple(v)) flags.push_back("S");
    positions.push_back({{"vertex", format_zvertex(delta, v)}, {"dimvec", mod.dimvec.at(v)}, {"flags", flags}});
  }
  json proj = json::object();
  json inj = json::object();
  for (VertexIndex x = 0; x < delta.vertex_count(); ++x) {
    proj[delta.vertex(x).id] = format_zvertex(delta, mod.projective_at[x]);
    inj[delta.vertex(x).id] = format_zvertex(delta, mod.injective_at[x]);
  }
  return {{"type", to_json(mod.type)},
          {"count", mod.positions.size()},
          {"positions", positions},
          {"projective_at", proj},
          {"injective_at", inj}};
}

json to_json(const Quiver& delta, const HomSpace& h, const ZQuiverWindow& w) {
  json basis = json::array();
  for (const Path& p : h.quotient_basis) {
    json arrows = json::array();
    for (std::size_t a : p) arrows.push_back(format_zarrow(delta, w.arrows()[a]));
    basis.push_back(arrows);
  }
  return {{"from", format_zvertex(delta, h.from)},
          {"to", format_zvertex(delta, h.to)},
          {"dimension", h.dimension},
          {"paths", h.path_count},
          {"relation_rank", h.relation_rank},
          {"quotient_basis", basis},
          {"window", {w.first_level(), w.last_level()}}};
}

json to_json(const SigmaNormalForm& nf) {
  return {{"relation", nf.relation},
          {"sigma_power", nf.sigma_power},
          {"tau_power", nf.tau_power},
          {"twisted", nf.twisted},
          {"twist", nf.twist.image},
          {"minimal_relation", nf.minimal_relation}};
}

json to_json(const SliceGroup& g) {
  json cosets = json::array();
  for (const SliceMap& c : g.cosets) cosets.push_back(to_json(g.delta, c));
  json torsion = json::array();
  for (const SliceMap& t : g.torsion) torsion.push_back(to_json(g.delta, t));
  return {{"radius", g.radius},
          {"cosets", cosets},
          {"torsion_order", g.torsion_order()},
          {"torsion", torsion},
          {"torsion_is_twists", g.torsion_is_twists},
          {"degree_denominator", g.degree_denominator},
          {"fractional", to_json(g.delta, g.fractional)},
          {"fractional_power_is_tau", g.fractional_power_is_tau},
          {"fractional_is_central", g.fractional_is_central},
          {"relations", g.relations}};
}

json to_json(const SymbolicFactor& f) {
  return {{"tag", f.tag_name()}, {"parameter", f.parameter}, {"display", f.display()}};
}

json to_json(const GroupPresentation& p) {
  json factors = json::array();
  for (const SymbolicFactor& f : p.factors) factors.push_back(to_json(f));
  json realization = json::object();
  for (const auto& [name, e] : p.realization) realization[name] = to_json(*p.delta, e.map);
  json j = {{"type", to_json(p.type)},
            {"finite_type", p.finite_type},
            {"generators", p.generators},
            {"relations", p.relations},
            {"identification", p.identification},
            {"combinatorial_identification", p.combinatorial_identification},
            {"torsion", {{"name", p.torsion_name}, {"order", p.torsion_order}}},
            {"degree_denominator", p.degree_denominator},
            {"factors", factors},
            {"action", p.action},
            {"realization", realization}};
  if (p.sigma_form) j["sigma_normal_form"] = to_json(*p.sigma_form);
  return j;
}

json to_json(const WeylGroupReport& r) {
  return {{"complete", r.complete}, {"order", r.elements_found}, {"bound", r.bound}, {"generators", r.generators.size()}};
}

json to_json(const Orientation& o) {
  json arrows = json::array();
  for (const auto& [s, t] : o.arrows) arrows.push_back(o.vertex_ids[s] + "->" + o.vertex_ids[t]);
  return arrows;
}

json to_json(const GroupoidWalk& w) {
  json word = json::array();
  for (VertexIndex x : w.word) word.push_back(w.start.vertex_ids[x]);
  json j = {{"start", to_json(w.start)},
            {"word", word},
            {"end", to_json(w.end)},
            {"accumulated", to_json(w.accumulated)},
            {"closed", w.closed}};
  if (w.coxeter_exponent) j["coxeter_exponent"] = *w.coxeter_exponent;
  return j;
}

}  // namespace dpic
