#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dpic/catalog.hpp"
#include "dpic/errors.hpp"
#include "dpic/quiver.hpp"

using namespace dpic;

namespace {

Quiver linear(int n) {
  Quiver q("L" + std::to_string(n));
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (int i = 1; i < n; ++i) q.add_arrow("e" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return q;
}

// Reference count of Aut(Q_0; d) by trying every permutation.
std::size_t brute_force_vertex_aut(const Quiver& q) {
  std::vector<VertexIndex> p(q.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (VertexIndex x = 0; x < p.size() && ok; ++x) {
      for (VertexIndex y = 0; y < p.size() && ok; ++y) ok = q.multiplicity(p[x], p[y]) == q.multiplicity(x, y);
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::set<VertexPermutation> closure(const std::vector<VertexPermutation>& gens, std::size_t n) {
  std::set<VertexPermutation> seen{VertexPermutation::identity(n)};
  std::vector<VertexPermutation> todo{VertexPermutation::identity(n)};
  while (!todo.empty()) {
    const VertexPermutation g = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      const VertexPermutation h = s.compose(g);
      if (seen.insert(h).second) todo.push_back(h);
    }
  }
  return seen;
}

Quiver reorient(const Quiver& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Quiver out(q.name());
  for (const Vertex& v : q.vertices()) out.add_vertex(v.id, v.label);
  for (const Arrow& a : q.arrows()) {
    const bool flip = std::bernoulli_distribution(0.5)(rng);
    const std::string& s = q.vertex(a.source).id;
    const std::string& t = q.vertex(a.target).id;
    out.add_arrow(a.id, flip ? t : s, flip ? s : t);
  }
  return out;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("multiplicity counts arrows") {
    const Quiver o3 = omega(3);
    CHECK(o3.multiplicity("1", "2") == 3);
    CHECK(o3.multiplicity("2", "1") == 0);
    const Quiver a2 = dynkin_a(2);
    CHECK(a2.multiplicity("1", "2") == 1);
    CHECK(a2.multiplicity("2", "1") == 0);
    CHECK(dynkin_a(3).multiplicity("1", "3") == 0);
    CHECK_THROWS_AS(a2.multiplicity("1", "9"), InputError);
  }

  TEST_CASE("construction rejects duplicates and dangling arrows") {
    Quiver q;
    q.add_vertex("x");
    CHECK_THROWS_AS(q.add_vertex("x"), InputError);
    CHECK_THROWS_AS(q.add_arrow("a", "x", "y"), InputError);
    q.add_vertex("y");
    q.add_arrow("a", "x", "y");
    CHECK_THROWS_AS(q.add_arrow("a", "y", "x"), InputError);
  }

  TEST_CASE("classify recognises the catalog families") {
    CHECK(classify(linear(4)) == GraphType{GraphFamily::Dynkin, 'A', 4});
    CHECK(classify(affine_d(4)).display() == "D~_4");
    CHECK(classify(affine_d(4)).family == GraphFamily::AffineTree);
    const GraphType o2 = classify(omega(2));
    CHECK(o2.family == GraphFamily::MultiArrow);
    CHECK(o2.n == 2);
    CHECK(classify(dynkin_e(8)).code() == "E8");
    CHECK(classify(affine_e(7)).code() == "Et7");
    const GraphType t = classify(cycle_t(3, 2));
    CHECK(t.family == GraphFamily::AffineCycle);
    CHECK(t.p == 3);
    CHECK(t.q == 2);
    CHECK(classify(cycle_t(1, 1)).family == GraphFamily::MultiArrow);
  }

  TEST_CASE("classify covers every catalog entry consistently with its name") {
    for (const std::string& name : catalog_names()) {
      CAPTURE(name);
      const GraphType t = classify(catalog_quiver(name));
      CHECK(t.family != GraphFamily::Other);
      if (name.rfind("T", 0) != 0) CHECK(t.code() == name);
    }
  }

  TEST_CASE("classify rejects disconnected and cyclic input and reports Other") {
    Quiver disconnected;
    disconnected.add_vertex("1");
    disconnected.add_vertex("2");
    CHECK_THROWS_AS(classify(disconnected), UnsupportedInput);

    Quiver cyclic;
    for (const char* v : {"1", "2", "3"}) cyclic.add_vertex(v);
    cyclic.add_arrow("a", "1", "2");
    cyclic.add_arrow("b", "2", "3");
    cyclic.add_arrow("c", "3", "1");
    CHECK_THROWS_AS(classify(cyclic), UnsupportedInput);

    // Star with four arms of length 2 is wild.
    Quiver star;
    star.add_vertex("c");
    for (int i = 0; i < 4; ++i) {
      const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
      star.add_vertex(a);
      star.add_vertex(b);
      star.add_arrow("x" + std::to_string(i), "c", a);
      star.add_arrow("y" + std::to_string(i), a, b);
    }
    CHECK(classify(star).family == GraphFamily::Other);

    Quiver triple;
    for (const char* v : {"1", "2", "3"}) triple.add_vertex(v);
    triple.add_arrow("a", "1", "2");
    triple.add_arrow("b", "1", "2");
    triple.add_arrow("c", "2", "3");
    CHECK(classify(triple).family == GraphFamily::Other);
  }

  TEST_CASE("classification of trees does not depend on the orientation") {
    for (const std::string& name : catalog_names()) {
      const Quiver q = catalog_quiver(name);
      if (!is_tree(q)) continue;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CAPTURE(name);
        CAPTURE(seed);
        CHECK(classify(reorient(q, seed)) == classify(q));
      }
    }
  }

  TEST_CASE("vertex automorphisms") {
    CHECK(aut_vertices_d(dynkin_d(4)).order() == 6);
    for (int n = 1; n <= 8; ++n) CHECK(aut_vertices_d(dynkin_a(n)).order() == 1);
    CHECK(aut_vertices_d(affine_d(4)).order() == 24);
    CHECK(aut_vertices_d(omega(3)).order() == 1);
  }

  TEST_CASE("vertex automorphisms preserve d and match brute force") {
    for (const std::string& name : catalog_names()) {
      const Quiver q = catalog_quiver(name);
      if (q.vertex_count() > 9) continue;
      CAPTURE(name);
      const VertexAutomorphismGroup g = aut_vertices_d(q);
      CHECK(g.order() == brute_force_vertex_aut(q));
      for (const VertexPermutation& p : g.elements) {
        CHECK(p.is_bijection());
        CHECK(preserves_multiplicity(q, p));
      }
      for (const auto& a : g.generators) {
        for (const auto& b : g.generators) CHECK(preserves_multiplicity(q, a.compose(b)));
      }
      CHECK(closure(g.generators, q.vertex_count()).size() == g.order());
    }
  }

  TEST_CASE("quiver automorphisms") {
    const QuiverAutomorphismGroup o2 = aut_quiver(omega(2));
    CHECK(o2.order == 2);
    CHECK(aut_vertices_d(omega(2)).order() == 1);
    CHECK(aut_quiver(omega(3)).order == 6);
    for (const char* name : {"A5", "D4", "D7", "E6", "Dt4", "Dt5", "Et6", "T3_2"}) {
      const Quiver q = catalog_quiver(name);
      CAPTURE(name);
      CHECK(aut_quiver(q).order == aut_vertices_d(q).order());
    }
    for (const auto& g : o2.generators) CHECK(is_quiver_automorphism(omega(2), g));
  }

  TEST_CASE("every vertex automorphism lifts to a quiver automorphism") {
    for (const char* name : {"D4", "Dt4", "Omega3", "T2_2", "E6"}) {
      const Quiver q = catalog_quiver(name);
      for (const VertexPermutation& p : aut_vertices_d(q).elements) {
        const QuiverAutomorphism f = lift_to_quiver(q, p);
        CHECK(f.vertices == p);
        CHECK(is_quiver_automorphism(q, f));
      }
    }
  }

  TEST_CASE("graph predicates") {
    const Quiver a3 = dynkin_a(3);
    CHECK(sources(a3) == std::vector<VertexIndex>{0});
    CHECK(sinks(a3) == std::vector<VertexIndex>{2});
    CHECK_FALSE(is_tree(omega(2)));
    CHECK(is_tree(dynkin_e(7)));
    CHECK_FALSE(is_tree(cycle_t(2, 1)));
    CHECK(sources(dynkin_d(4)) == std::vector<VertexIndex>{0});
    CHECK_FALSE(has_oriented_cycle(cycle_t(3, 3)));
    CHECK(diameter(dynkin_a(5)) == 4);
    CHECK(underlying_degrees(omega(3)) == std::vector<int>{3, 3});
  }

  TEST_CASE("topological order respects arrows") {
    for (const std::string& name : catalog_names()) {
      const Quiver q = catalog_quiver(name);
      const auto order = topological_order(q);
      std::vector<std::size_t> pos(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
      for (const Arrow& a : q.arrows()) CHECK(pos[a.source] < pos[a.target]);
    }
  }

  TEST_CASE("positive root counts") {
    CHECK(positive_root_count({GraphFamily::Dynkin, 'A', 4}) == 10);
    CHECK(positive_root_count({GraphFamily::Dynkin, 'D', 5}) == 20);
    CHECK(positive_root_count({GraphFamily::Dynkin, 'E', 8}) == 120);
  }

  TEST_CASE("permutation helpers") {
    VertexPermutation p{{1, 2, 0}};
    CHECK(p.order() == 3);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK_FALSE(VertexPermutation{{0, 0, 1}}.is_bijection());
  }

  TEST_CASE("catalog lookup") {
    CHECK(catalog_quiver("@D4") == catalog_quiver("D4"));
    CHECK_THROWS_AS(catalog_quiver("Z9"), InputError);
    CHECK(catalog_quiver("T4_4").vertex_count() == 8);
    CHECK(catalog_names().size() == 8 + 5 + 3 + 5 + 3 + 3 + 10);
  }
}
