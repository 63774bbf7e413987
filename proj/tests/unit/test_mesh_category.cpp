#include <doctest.h>

#include "dpic/catalog.hpp"
#include "dpic/errors.hpp"
#include "dpic/knitting.hpp"
#include "dpic/mesh_category.hpp"
#include "module_oracle.hpp"

using namespace dpic;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> arrow_pairs(const Quiver& q) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Arrow& a : q.arrows()) out.emplace_back(a.source, a.target);
  return out;
}

}  // namespace

TEST_SUITE("mesh_category") {
  TEST_CASE("path spaces") {
    const Quiver a2 = dynkin_a(2);
    const ZQuiverWindow w2 = build_window(a2, 0, 1);
    const PathSpace p = path_space(w2, {0, 0}, {1, 0});
    REQUIRE(p.dimension() == 1);
    CHECK(p.basis[0].size() == 2);
    CHECK(w2.arrows()[p.basis[0][0]].target == ZVertex{0, 1});
    const PathSpace id = path_space(w2, {0, 0}, {0, 0});
    REQUIRE(id.dimension() == 1);
    CHECK(id.basis[0].empty());
    CHECK(path_space(build_window(dynkin_a(3), 0, 1), {0, 0}, {1, 1}).dimension() == 2);
    CHECK(path_space(w2, {1, 0}, {0, 0}).dimension() == 0);
    CHECK_THROWS_AS(path_space(w2, {0, 0}, {3, 0}), RangeError);
  }

  TEST_CASE("hom dimensions") {
    const Quiver a2 = dynkin_a(2);
    CHECK(hom_dim(a2, {0, 0}, {0, 0}) == 1);
    CHECK(hom_dim(a2, {0, 0}, {1, 0}) == 0);
    CHECK(hom_dim(a2, {0, 0}, {0, 1}) == 1);
    const HomSpace h = hom_space(hom_window(a2, {0, 0}, {1, 0}), {0, 0}, {1, 0});
    CHECK(h.path_count == 1);
    CHECK(h.relation_rank == 1);
    CHECK(hom_dim(omega(2), {0, 0}, {0, 1}) == 2);
    CHECK(hom_dim(omega(2), {0, 0}, {1, 0}) == 3);
  }

  TEST_CASE("the margin is enforced") {
    const Quiver a2 = dynkin_a(2);
    const ZQuiverWindow tight = build_window(a2, 0, 1);
    CHECK_THROWS_AS(hom_dim(tight, {0, 0}, {1, 0}), InsufficientWindow);
    CHECK_NOTHROW(hom_dim(build_window(a2, -1, 2), {0, 0}, {1, 0}));
  }

  TEST_CASE("hom is stable under enlarging the window") {
    for (const char* name : {"A3", "D4", "Omega2", "T2_1"}) {
      const Quiver q = catalog_quiver(name);
      const ZQuiverWindow big = build_window(q, -3, 5);
      const ZQuiverWindow sources = build_window(q, 0, 0);
      const ZQuiverWindow targets = build_window(q, 0, 2);
      for (const ZVertex& v : sources.vertices()) {
        for (const ZVertex& u : targets.vertices()) {
          CAPTURE(name);
          CHECK(hom_dim(big, v, u) == hom_dim(q, v, u));
        }
      }
    }
  }

  TEST_CASE("hom is tau-equivariant and vanishes against the level") {
    for (const char* name : {"A3", "D5", "E6", "Omega3", "Dt4"}) {
      const Quiver q = catalog_quiver(name);
      const ZQuiverWindow sources = build_window(q, 0, 0);
      const ZQuiverWindow targets = build_window(q, 0, 2);
      for (const ZVertex& v : sources.vertices()) {
        for (const ZVertex& u : targets.vertices()) {
          CHECK(hom_dim(q, v, u) == hom_dim(q, tau(v), tau(u)));
          CHECK(hom_dim(q, v, u) == hom_dim(q, tau_inv(tau_inv(v)), tau_inv(tau_inv(u))));
          if (u.level > v.level) CHECK(hom_dim(q, u, v) == 0);
        }
      }
    }
  }

  TEST_CASE("endomorphisms of every vertex are one dimensional") {
    for (const std::string& name : catalog_names()) {
      const Quiver q = catalog_quiver(name);
      const ZQuiverWindow level0 = build_window(q, 0, 0);
      for (const ZVertex& v : level0.vertices()) CHECK(hom_dim(q, v, v) == 1);
    }
  }

  TEST_CASE("no morphisms between components") {
    const Quiver q = affine_d(4);
    CHECK(hom_dim(q, {0, 0, 0}, {1, 0, 1}) == 0);
    CHECK(hom_dim(q, {0, 0, 1}, {0, 0, 1}) == 1);
  }

  TEST_CASE("mesh nilpotence") {
    for (const char* name : {"A3", "D4", "E6", "Omega2", "Dt5"}) {
      const MeshNilpotenceReport r = verify_mesh_nilpotence(build_window(catalog_quiver(name), -1, 3));
      CAPTURE(name);
      CHECK(r.ok());
      CHECK(r.meshes_checked > 0);
    }
    const Quiver a3 = dynkin_a(3);
    const ZQuiverWindow w = build_window(a3, -1, 3);
    const Path composite = {*w.find_arrow(0, 0, false), *w.find_arrow(0, 0, true)};
    CHECK(is_zero_in_hom(w, {0, 0}, {1, 0}, {{composite, 1}}));
  }

  TEST_CASE("Omega_2 mesh: the sum vanishes, single terms do not") {
    const ZQuiverWindow w = build_window(omega(2), -1, 2);
    const std::vector<Mesh> meshes = w.meshes();
    const Mesh* mesh = nullptr;
    for (const Mesh& m : meshes) {
      if (m.end == ZVertex{1, 0}) mesh = &m;
    }
    REQUIRE(mesh != nullptr);
    const PathCombination sum = mesh_element(*mesh);
    CHECK(sum.size() == 2);
    CHECK(is_zero_in_hom(w, mesh->start, mesh->end, sum));
    for (const auto& term : sum) CHECK_FALSE(is_zero_in_hom(w, mesh->start, mesh->end, {term}));
    CHECK(hom_dim(w, mesh->start, mesh->end) == 3);
  }

  TEST_CASE("module oracle sanity") {
    const auto arrows = arrow_pairs(dynkin_a(2));
    const oracle::Rep p1 = oracle::thin_rep_of_opposite(arrows, {1, 0});
    const oracle::Rep p2 = oracle::thin_rep_of_opposite(arrows, {1, 1});
    const oracle::Rep s2 = oracle::thin_rep_of_opposite(arrows, {0, 1});
    CHECK(oracle::hom_dimension(p1, p2) == 1);
    CHECK(oracle::hom_dimension(p2, p1) == 0);
    CHECK(oracle::hom_dimension(p2, s2) == 1);
    CHECK(oracle::hom_dimension(s2, p1) == 0);
    CHECK(oracle::hom_dimension(p2, p2) == 1);
  }

  TEST_CASE("mesh category agrees with module homomorphisms on A_2 and A_3") {
    for (int n : {2, 3}) {
      const Quiver q = dynkin_a(n);
      const ARQuiverModA mod = knit(q);
      const auto arrows = arrow_pairs(q);
      for (const ZVertex& v : mod.positions) {
        for (const ZVertex& u : mod.positions) {
          const auto mv = oracle::thin_rep_of_opposite(arrows, mod.dimvec.at(v));
          const auto mu = oracle::thin_rep_of_opposite(arrows, mod.dimvec.at(u));
          CAPTURE(format_zvertex(q, v));
          CAPTURE(format_zvertex(q, u));
          CHECK(hom_dim(q, v, u) == oracle::hom_dimension(mv, mu));
        }
      }
    }
  }
}
