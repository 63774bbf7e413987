#include "dpic/mesh_category.hpp"

#include <algorithm>
#include <map>

#include "exact_linear_algebra.hpp"

namespace dpic {

namespace {

using detail::Rational;
using detail::RationalRow;
using detail::RowEchelon;

// Vertices of the window from which u is reachable.
std::vector<bool> reaches(const ZQuiverWindow& w, ZVertex u) {
  std::vector<bool> mark(w.vertices().size(), false);
  std::vector<ZVertex> stack{u};
  mark[w.index_of(u)] = true;
  while (!stack.empty()) {
    const ZVertex x = stack.back();
    stack.pop_back();
    for (std::size_t a : w.in_arrows(x)) {
      const ZVertex s = w.arrows()[a].source;
      if (!mark[w.index_of(s)]) {
        mark[w.index_of(s)] = true;
        stack.push_back(s);
      }
    }
  }
  return mark;
}

std::vector<Path> enumerate_paths(const ZQuiverWindow& w, ZVertex v, ZVertex u) {
  std::vector<Path> out;
  const std::vector<bool> good = reaches(w, u);
  if (!good[w.index_of(v)]) return out;
  Path current;
  auto dfs = [&](auto&& self, ZVertex x) -> void {
    if (x == u) out.push_back(current);
    for (std::size_t a : w.out_arrows(x)) {
      const ZVertex t = w.arrows()[a].target;
      if (!good[w.index_of(t)]) continue;
      current.push_back(a);
      self(self, t);
      current.pop_back();
    }
  };
  dfs(dfs, v);
  return out;
}

void require_margin(const ZQuiverWindow& w, ZVertex v, ZVertex u) {
  w.index_of(v);
  w.index_of(u);
  const int lo = std::min(v.level, u.level);
  const int hi = std::max(v.level, u.level);
  if (lo - 1 < w.first_level() || hi + 1 > w.last_level()) {
    throw InsufficientWindow("hom between levels " + std::to_string(lo) + " and " +
                             std::to_string(hi) + " needs the window to cover [" +
                             std::to_string(lo - 1) + "," + std::to_string(hi + 1) + "]");
  }
}

// Path basis plus the echelon form of the mesh-ideal component.
struct HomData {
  std::vector<Path> paths;
  std::map<Path, std::size_t> column;
  RowEchelon relations{0};
};

HomData compute_hom(const ZQuiverWindow& w, ZVertex v, ZVertex u) {
  HomData data;
  data.paths = enumerate_paths(w, v, u);
  for (std::size_t i = 0; i < data.paths.size(); ++i) data.column[data.paths[i]] = i;
  data.relations = RowEchelon(data.paths.size());
  if (data.paths.empty()) return data;

  for (const Mesh& mesh : w.meshes()) {
    if (mesh.start.level < v.level || mesh.end.level > u.level) continue;
    const std::vector<Path> before = enumerate_paths(w, v, mesh.start);
    if (before.empty()) continue;
    const std::vector<Path> after = enumerate_paths(w, mesh.end, u);
    if (after.empty()) continue;
    const PathCombination m = mesh_element(mesh);
    for (const Path& q : before) {
      for (const Path& p : after) {
        RationalRow row(data.paths.size());
        for (const auto& [middle, coeff] : m) {
          Path full = q;
          full.insert(full.end(), middle.begin(), middle.end());
          full.insert(full.end(), p.begin(), p.end());
          row[data.column.at(full)] += coeff;
        }
        data.relations.insert(std::move(row));
      }
    }
  }
  return data;
}

HomSpace to_space(ZVertex v, ZVertex u, const HomData& data) {
  HomSpace h{v, u, data.paths.size(), data.relations.rank(), 0, {}};
  h.dimension = h.path_count - h.relation_rank;
  for (std::size_t c : data.relations.free_columns()) h.quotient_basis.push_back(data.paths[c]);
  return h;
}

bool combination_is_zero(const HomData& data, const PathCombination& element) {
  RationalRow row(data.paths.size());
  for (const auto& [path, coeff] : element) {
    auto it = data.column.find(path);
    if (it == data.column.end()) throw InputError("path does not run between the given vertices");
    row[it->second] += coeff;
  }
  return data.relations.in_span(std::move(row));
}

}  // namespace

PathSpace path_space(const ZQuiverWindow& w, ZVertex v, ZVertex u) {
  w.index_of(v);
  w.index_of(u);
  return {v, u, enumerate_paths(w, v, u)};
}

ZQuiverWindow hom_window(const Quiver& delta, ZVertex v, ZVertex u) {
  const int lo = std::min(v.level, u.level);
  const int hi = std::max(v.level, u.level);
  return build_window(delta, lo - 1, hi + 1, v.component);
}

HomSpace hom_space(const ZQuiverWindow& w, ZVertex v, ZVertex u) {
  require_margin(w, v, u);
  return to_space(v, u, compute_hom(w, v, u));
}

std::size_t hom_dim(const ZQuiverWindow& w, ZVertex v, ZVertex u) { return hom_space(w, v, u).dimension; }

std::size_t hom_dim(const Quiver& delta, ZVertex v, ZVertex u) {
  if (v.component != u.component) return 0;
  if (u.level < v.level) return 0;
  return hom_dim(hom_window(delta, v, u), v, u);
}

bool is_zero_in_hom(const ZQuiverWindow& w, ZVertex v, ZVertex u, const PathCombination& element) {
  require_margin(w, v, u);
  return combination_is_zero(compute_hom(w, v, u), element);
}

PathCombination mesh_element(const Mesh& mesh) {
  PathCombination out;
  for (const MeshMiddle& mid : mesh.middles) {
    for (std::size_t j = 0; j < mid.betas.size(); ++j) out.push_back({{mid.alphas[j], mid.betas[j]}, 1});
  }
  return out;
}

MeshNilpotenceReport verify_mesh_nilpotence(const ZQuiverWindow& w) {
  MeshNilpotenceReport report;
  const Quiver& delta = w.generator();
  for (const Mesh& mesh : w.meshes()) {
    if (mesh.start.level - 1 < w.first_level() || mesh.end.level + 1 > w.last_level()) continue;
    ++report.meshes_checked;
    const PathCombination m = mesh_element(mesh);
    if (!m.empty() && !combination_is_zero(compute_hom(w, mesh.start, mesh.end), m)) {
      report.failures.push_back("mesh ending at " + format_zvertex(delta, mesh.end) + " is nonzero");
    }
    // Composites b·m for quotient-basis paths b into the mesh start.
    for (const ZVertex& v : w.vertices()) {
      if (v.level < mesh.start.level - 1 || v.level > mesh.start.level) continue;
      if (v.level - 1 < w.first_level()) continue;
      const HomData into = compute_hom(w, v, mesh.start);
      if (into.paths.empty()) continue;
      const HomData total = compute_hom(w, v, mesh.end);
      for (std::size_t c : into.relations.free_columns()) {
        PathCombination composite;
        for (const auto& [middle, coeff] : m) {
          Path full = into.paths[c];
          full.insert(full.end(), middle.begin(), middle.end());
          composite.push_back({std::move(full), coeff});
        }
        ++report.composites_checked;
        if (!composite.empty() && !combination_is_zero(total, composite)) {
          report.failures.push_back("composite from " + format_zvertex(delta, v) +
                                    " through the mesh ending at " +
                                    format_zvertex(delta, mesh.end) + " is nonzero");
        }
      }
    }
  }
  return report;
}

}  // namespace dpic
