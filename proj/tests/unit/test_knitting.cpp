#include <doctest.h>

#include <set>

#include "dpic/catalog.hpp"
#include "dpic/errors.hpp"
#include "dpic/k_theory.hpp"
#include "dpic/knitting.hpp"

using namespace dpic;

namespace {

std::set<std::string> position_names(const ARQuiverModA& mod) {
  std::set<std::string> out;
  for (const ZVertex& v : mod.positions) out.insert(format_zvertex(mod.delta, v));
  return out;
}

}  // namespace

TEST_SUITE("knitting") {
  TEST_CASE("projective and injective dimension vectors") {
    const Quiver a2 = dynkin_a(2);
    CHECK(projective_dimvec(a2, 0) == DimensionVector{1, 0});
    CHECK(projective_dimvec(a2, 1) == DimensionVector{1, 1});
    CHECK(injective_dimvec(a2, 0) == DimensionVector{1, 1});
    CHECK(injective_dimvec(a2, 1) == DimensionVector{0, 1});
  }

  TEST_CASE("A_3 fills the triangle m + i <= 3") {
    const ARQuiverModA mod = knit(dynkin_a(3));
    CHECK(position_names(mod) == std::set<std::string>{"(0,1)", "(0,2)", "(0,3)", "(1,1)", "(1,2)", "(2,1)"});
    for (VertexIndex i = 0; i < 3; ++i) {
      CHECK(mod.projective_at[i] == ZVertex{0, i});
      CHECK(mod.injective_at[i] == ZVertex{static_cast<int>(i), 2 - i});
    }
  }

  TEST_CASE("A_n triangle for every n") {
    for (int n = 1; n <= 8; ++n) {
      const ARQuiverModA mod = knit(dynkin_a(n));
      std::set<ZVertex> triangle;
      for (int m = 0; m < n; ++m) {
        for (int i = 1; m + i <= n; ++i) triangle.insert({m, static_cast<VertexIndex>(i - 1)});
      }
      CHECK(std::set<ZVertex>(mod.positions.begin(), mod.positions.end()) == triangle);
    }
  }

  TEST_CASE("D_4 occupies three full levels") {
    const ARQuiverModA mod = knit(dynkin_d(4));
    CHECK(mod.positions.size() == 12);
    for (const ZVertex& v : mod.positions) CHECK((v.level >= 0 && v.level <= 2));
    CHECK(mod.is_simple({0, 0}));
    for (VertexIndex i = 1; i < 4; ++i) {
      CHECK(mod.is_simple({2, i}));
      CHECK(mod.injective_at[i] == ZVertex{2, i});
    }
    CHECK(mod.injective_at[0] == ZVertex{2, 0});
  }

  TEST_CASE("A_2 has a simple projective at the source") {
    const ARQuiverModA mod = knit(dynkin_a(2));
    CHECK(mod.positions.size() == 3);
    CHECK(mod.is_simple({0, 0}));
    CHECK(mod.is_projective({0, 0}));
  }

  TEST_CASE("counts and the root system") {
    for (const char* name : {"A1", "A5", "D5", "D8", "E6", "E7", "E8"}) {
      const Quiver q = catalog_quiver(name);
      const ARQuiverModA mod = knit(q);
      CAPTURE(name);
      CHECK(static_cast<int>(mod.positions.size()) == positive_root_count(classify(q)));
      std::set<std::vector<std::int64_t>> dims;
      for (const auto& [v, d] : mod.dimvec) {
        for (int e : d) CHECK(e >= 0);
        dims.insert(std::vector<std::int64_t>(d.begin(), d.end()));
      }
      const auto roots = positive_roots(q);
      CHECK(dims == std::set<std::vector<std::int64_t>>(roots.begin(), roots.end()));
    }
  }

  TEST_CASE("mesh additivity inside the knitted region") {
    for (const char* name : {"A4", "D6", "E6"}) {
      const Quiver q = catalog_quiver(name);
      const ARQuiverModA mod = knit(q);
      for (const ZVertex& v : mod.positions) {
        const ZVertex next = tau_inv(v);
        if (!mod.contains(next)) continue;
        std::vector<int> sum(q.vertex_count(), 0);
        for (ArrowIndex a : q.in_arrows(v.base)) {
          const ZVertex mid{v.level + 1, q.arrow(a).source};
          if (mod.contains(mid)) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += mod.dimvec.at(mid)[i];
          }
        }
        for (ArrowIndex a : q.out_arrows(v.base)) {
          const ZVertex mid{v.level, q.arrow(a).target};
          if (mod.contains(mid)) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += mod.dimvec.at(mid)[i];
          }
        }
        for (std::size_t i = 0; i < sum.size(); ++i) CHECK(mod.dimvec.at(v)[i] + mod.dimvec.at(next)[i] == sum[i]);
      }
    }
  }

  TEST_CASE("knitting rejects non-Dynkin input") {
    CHECK_THROWS_AS(knit(affine_d(4)), UnsupportedInput);
    CHECK_THROWS_AS(knit(omega(2)), UnsupportedInput);
  }

  TEST_CASE("shift permutation on the slice") {
    for (int n = 1; n <= 8; ++n) {
      const SliceMap sigma = sigma_permutation(dynkin_a(n));
      for (int i = 1; i <= n; ++i) {
        CHECK(sigma.image()[i - 1] == ZVertex{i, static_cast<VertexIndex>(n - i)});
      }
    }
    const SliceMap d4 = sigma_permutation(dynkin_d(4));
    CHECK(d4 == SliceMap::tau_power(4, -3));
    CHECK(sigma_permutation(dynkin_a(1)) == SliceMap::tau_power(1, -1));
  }

  TEST_CASE("shift commutes with tau and preserves d") {
    for (const char* name : {"A6", "D5", "D6", "E6", "E7", "E8"}) {
      const Quiver q = catalog_quiver(name);
      const SliceMap sigma = sigma_permutation(q);
      const SliceMap t = SliceMap::tau_power(q.vertex_count(), 1);
      CHECK(sigma.compose(t) == t.compose(sigma));
      CHECK(preserves_z_multiplicity(q, sigma));
      CHECK(validate_on_window(sigma, build_window(q, -2, 4)));
    }
  }

  TEST_CASE("normal forms") {
    CHECK(sigma_normal_form(dynkin_d(4)).relation == "tau^3 = sigma^-1");
    CHECK(sigma_normal_form(dynkin_e(8)).relation == "tau^15 = sigma^-1");
    const SigmaNormalForm d5 = sigma_normal_form(dynkin_d(5));
    CHECK(d5.relation == "tau^4 = theta sigma^-1");
    CHECK(d5.twist.order() == 2);
    // θ swaps the two short arms 2 and 3.
    CHECK(d5.twist.image == std::vector<VertexIndex>{0, 2, 1, 3, 4});
    const SigmaNormalForm a4 = sigma_normal_form(dynkin_a(4));
    CHECK(a4.relation == "tau^5 = sigma^-2");
    CHECK(a4.minimal_sigma_power == 2);
    const SigmaNormalForm a1 = sigma_normal_form(dynkin_a(1));
    CHECK(a1.relation == "tau^2 = sigma^-2");
    CHECK(a1.minimal_relation == "tau = sigma^-1");
    CHECK(format_sigma_relation(1, 1, true) == "tau = theta sigma^-1");
  }
}
