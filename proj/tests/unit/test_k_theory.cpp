#include <doctest.h>

#include <functional>

#include "dpic/catalog.hpp"
#include "dpic/errors.hpp"
#include "dpic/int_matrix.hpp"
#include "dpic/k_theory.hpp"

using namespace dpic;

namespace {

bool adjacent(const Quiver& q, VertexIndex x, VertexIndex y) {
  return q.multiplicity(x, y) + q.multiplicity(y, x) > 0;
}

Quiver discrete(int n) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  return q;
}

}  // namespace

TEST_SUITE("k_theory") {
  TEST_CASE("Cartan matrices") {
    CHECK(cartan(dynkin_a(2)) == IntMatrix{{1, 1}, {0, 1}});
    CHECK(cartan(discrete(3)) == IntMatrix::identity(3));
    CHECK(cartan(omega(2)) == IntMatrix{{1, 2}, {0, 1}});
    for (const std::string& name : catalog_names()) {
      const IntMatrix c = cartan(catalog_quiver(name));
      CHECK(c.determinant() == 1);
      CHECK(c * c.inverse() == IntMatrix::identity(c.rows()));
    }
  }

  TEST_CASE("Coxeter matrices send projectives to minus injectives") {
    CHECK(coxeter_matrix(dynkin_a(1)) == IntMatrix{{-1}});
    CHECK(coxeter_matrix(dynkin_a(2)).power(3).is_identity());
    CHECK(coxeter_matrix(dynkin_e(8)).power(15) == -IntMatrix::identity(8));
    for (const char* name : {"A4", "D5", "E6", "Dt4", "T3_2"}) {
      const Quiver q = catalog_quiver(name);
      const IntMatrix phi = coxeter_matrix(q);
      const IntMatrix c = cartan(q);
      for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
        std::vector<IntMatrix::Entry> e(q.vertex_count(), 0);
        e[x] = 1;
        // [P_x] = e_x; [I_x] has projective coordinates C^{-1} (column x of C^T).
        std::vector<IntMatrix::Entry> injective(q.vertex_count());
        for (std::size_t y = 0; y < injective.size(); ++y) injective[y] = c(x, y);
        const auto in_proj = c.inverse() * injective;
        auto image = phi * e;
        for (auto& v : image) v = -v;
        CHECK(image == in_proj);
      }
    }
  }

  TEST_CASE("reflections") {
    const Quiver a2 = dynkin_a(2);
    const IntMatrix s1 = reflection(a2, "1");
    CHECK(s1 * std::vector<IntMatrix::Entry>{1, 0} == std::vector<IntMatrix::Entry>{-1, 1});
    CHECK(s1 * std::vector<IntMatrix::Entry>{0, 1} == std::vector<IntMatrix::Entry>{0, 1});
    CHECK_THROWS_AS(reflection(a2, "7"), InputError);
    for (const char* name : {"A5", "D6", "E7", "Dt5", "Et6"}) {
      const Quiver q = catalog_quiver(name);
      for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
        const IntMatrix sx = reflection(q, x);
        CHECK((sx * sx).is_identity());
        for (VertexIndex y = x + 1; y < q.vertex_count(); ++y) {
          const IntMatrix sy = reflection(q, y);
          const IntMatrix prod = sx * sy;
          if (adjacent(q, x, y)) {
            CHECK(prod.power(3).is_identity());
          } else {
            CHECK(prod == sy * sx);
            CHECK(prod.power(2).is_identity());
          }
        }
      }
    }
  }

  TEST_CASE("Weyl groups") {
    CHECK(weyl_group(dynkin_a(2)).elements_found == 6);
    CHECK(weyl_group(dynkin_a(3)).elements_found == 24);
    CHECK(weyl_group(dynkin_d(4)).elements_found == 192);
    const WeylGroupReport affine = weyl_group(affine_d(4), 5000);
    CHECK_FALSE(affine.complete);
    CHECK(affine.elements_found > 5000);
  }

  TEST_CASE("positive roots") {
    CHECK(positive_roots(dynkin_a(2)).size() == 3);
    CHECK(positive_roots(dynkin_d(4)).size() == 12);
    CHECK(positive_roots(dynkin_e(6)).size() == 36);
    CHECK_THROWS_AS(positive_roots(affine_d(4), 2000), UnsupportedInput);
  }

  TEST_CASE("source-admissible orderings") {
    auto ids = [](const Orientation& o, const std::vector<VertexIndex>& order) {
      std::vector<std::string> out;
      for (VertexIndex x : order) out.push_back(o.vertex_ids[x]);
      return out;
    };
    const Orientation a3 = Orientation::from_quiver(dynkin_a(3));
    CHECK(ids(a3, source_admissible_ordering(a3)) == std::vector<std::string>{"1", "2", "3"});
    const Orientation single = Orientation::from_quiver(dynkin_a(1));
    CHECK(source_admissible_ordering(single) == std::vector<VertexIndex>{0});
    Quiver rev;
    rev.add_vertex("1");
    rev.add_vertex("2");
    rev.add_arrow("a", "2", "1");
    const Orientation r = Orientation::from_quiver(rev);
    CHECK(ids(r, source_admissible_ordering(r)) == std::vector<std::string>{"2", "1"});
  }

  TEST_CASE("BGP reflections") {
    const Orientation a2 = Orientation::from_quiver(dynkin_a(2));
    const Orientation flipped = bgp_reflect(a2, 0);
    CHECK(flipped.arrows[0] == std::pair<VertexIndex, VertexIndex>{1, 0});
    CHECK_THROWS_AS(bgp_reflect(a2, 1), PreconditionError);
    // The two orientations of A_2 form a cycle of length 2.
    CHECK(bgp_reflect(flipped, 1) == a2);

    const Orientation d4 = Orientation::from_quiver(dynkin_d(4));
    const Orientation d4r = bgp_reflect(d4, 0);
    for (const auto& [s, t] : d4r.arrows) CHECK(t == 0);
  }

  TEST_CASE("reflections along an admissible ordering multiply to the Coxeter matrix") {
    const Orientation a2 = Orientation::from_quiver(dynkin_a(2));
    const ReflectionFactorizationReport r = verify_reflection_factorization(a2);
    CHECK(r.ok());
    CHECK(r.product == IntMatrix{{0, 1}, {-1, -1}});
    // The reversed product is the inverse.
    CHECK(reflection(dynkin_a(2), 0) * reflection(dynkin_a(2), 1) == r.coxeter.inverse());
    CHECK(verify_reflection_factorization(Orientation::from_quiver(dynkin_d(4))).ok());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Quiver q = random_tree_orientation(2 + seed % 8, seed * 7919 + 1);
      CAPTURE(seed);
      CHECK(verify_reflection_factorization(Orientation::from_quiver(q)).ok());
    }
  }

  TEST_CASE("groupoid walks") {
    const Orientation a3 = Orientation::from_quiver(dynkin_a(3));
    const GroupoidWalk empty = groupoid_walk(a3, {});
    CHECK(empty.closed);
    CHECK(empty.accumulated.is_identity());
    CHECK(empty.coxeter_exponent == 0);

    const auto word = source_admissible_ordering(a3);
    const GroupoidWalk once = groupoid_walk(a3, word);
    CHECK(once.closed);
    CHECK(once.accumulated == coxeter_matrix(dynkin_a(3)));
    CHECK(once.coxeter_exponent == 1);

    std::vector<VertexIndex> twice = word;
    twice.insert(twice.end(), word.begin(), word.end());
    const GroupoidWalk two = groupoid_walk(a3, twice);
    CHECK(two.accumulated == coxeter_matrix(dynkin_a(3)).power(2));
    CHECK_THROWS_AS(groupoid_walk(a3, {1}), PreconditionError);
  }

  TEST_CASE("every closed walk of length <= 2n on small trees is a power of Phi") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const std::size_t n = 2 + seed % 4;
      const Orientation start = Orientation::from_quiver(random_tree_orientation(n, seed));
      std::vector<VertexIndex> word;
      std::size_t closed = 0;
      std::function<void(const Orientation&)> dfs = [&](const Orientation& current) {
        if (!word.empty() && current == start) {
          const GroupoidWalk w = groupoid_walk(start, word);
          CHECK(w.closed);
          CHECK(w.coxeter_exponent.has_value());
          ++closed;
        }
        if (word.size() == 2 * n) return;
        for (VertexIndex x = 0; x < n; ++x) {
          if (!current.is_source(x)) continue;
          word.push_back(x);
          dfs(bgp_reflect(current, x));
          word.pop_back();
        }
      };
      dfs(start);
      CHECK(closed > 0);
    }
  }

  TEST_CASE("integer matrix arithmetic") {
    const IntMatrix m{{2, 1}, {1, 1}};
    CHECK(m.determinant() == 1);
    CHECK(m.inverse() == IntMatrix{{1, -1}, {-1, 2}});
    CHECK(m.power(-2) == m.inverse() * m.inverse());
    CHECK(IntMatrix{{2, 0}, {0, 1}}.determinant() == 2);
    CHECK_THROWS_AS(IntMatrix({{2, 0}, {0, 1}}).inverse(), ConsistencyError);
    CHECK(IntMatrix::permutation({1, 0}) * std::vector<IntMatrix::Entry>{1, 0} == std::vector<IntMatrix::Entry>{0, 1});
    CHECK(m.transpose().transpose() == m);
    CHECK(m.to_string() == "[[2,1], [1,1]]");
  }

  TEST_CASE("K_0 shadow of the shift relations") {
    CHECK(verify_coxeter_relation(dynkin_d(4), 3, 1, {0, 1, 2, 3}));
    CHECK(verify_coxeter_relation(dynkin_e(6), 6, 1, {0, 1, 2, 4, 3, 5}) ==
          (coxeter_matrix(dynkin_e(6)).power(6) == -IntMatrix::permutation({0, 1, 2, 4, 3, 5})));
    CHECK_FALSE(verify_coxeter_relation(dynkin_a(3), 4, 1, {0, 1, 2}));
  }
}
