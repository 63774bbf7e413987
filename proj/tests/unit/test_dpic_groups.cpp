#include <doctest.h>

#include <algorithm>

#include "dpic/catalog.hpp"
#include "dpic/dpic_groups.hpp"
#include "dpic/errors.hpp"

using namespace dpic;

namespace {

bool has_relation(const GroupPresentation& p, const std::string& r) {
  return std::find(p.relations.begin(), p.relations.end(), r) != p.relations.end();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("dpic_groups") {
  TEST_CASE("outer automorphisms of the path algebra") {
    using Tag = SymbolicFactor::Tag;
    CHECK(out0_description(dynkin_a(5)).tag == Tag::Trivial);
    CHECK(out0_description(dynkin_e(8)).tag == Tag::Trivial);
    const SymbolicFactor pgl = out0_description(omega(3));
    CHECK(pgl.tag == Tag::PGL);
    CHECK(pgl.parameter == 3);
    CHECK(out0_description(cycle_t(3, 1)).tag == Tag::UpperTriangular2);
    // For p = q the order-2 symmetry lives in the combinatorial part.
    CHECK(out0_description(cycle_t(2, 2)).tag == Tag::MultiplicativeGroup);
    CHECK(out0_description(cycle_t(1, 1)) == SymbolicFactor{Tag::PGL, 2});
    CHECK(out0_description(cycle_t(3, 2)).tag == Tag::MultiplicativeGroup);
    CHECK(pgl.tag_name() == "PGL");
  }

  TEST_CASE("type A presentations have a single shift relation") {
    for (int n = 1; n <= 6; ++n) {
      const GroupPresentation p = dpic_describe(dynkin_a(n));
      CAPTURE(n);
      CHECK(p.finite_type);
      REQUIRE(p.sigma_form.has_value());
      CHECK(p.generators == std::vector<std::string>{"tau", "sigma"});
      CHECK(check_relation(p, p.sigma_form->relation));
    }
    const GroupPresentation a4 = dpic_describe(dynkin_a(4));
    CHECK(has_relation(a4, "tau^5 = sigma^-2"));
    CHECK(a4.identification == "Z");
  }

  TEST_CASE("relation checking") {
    const GroupPresentation a4 = dpic_describe(dynkin_a(4));
    CHECK(check_relation(a4, "tau^5 sigma^2"));
    CHECK(check_relation(a4, "tau^5 = sigma^-2"));
    CHECK_FALSE(check_relation(a4, "tau^5"));
    CHECK(check_relation(a4, ""));
    CHECK(check_relation(a4, "(tau sigma)^2 = tau^2 sigma^2"));
    CHECK_THROWS_AS(check_relation(a4, "foo"), InputError);
    CHECK_THROWS_AS(check_relation(a4, "(tau"), InputError);
    CHECK_THROWS_AS(check_relation(a4, "tau^"), InputError);

    const GroupPresentation e6 = dpic_describe(dynkin_e(6));
    CHECK(check_relation(e6, "tau^6 sigma theta^-1"));
    CHECK(check_relation(e6, "theta^2"));
    CHECK_FALSE(check_relation(e6, "tau^6 sigma"));
    for (const std::string& r : e6.relations) CHECK(check_relation(e6, r));

    const GroupPresentation om = dpic_describe(omega(2));
    CHECK_THROWS_AS(check_relation(om, "F"), UnsupportedInput);
  }

  TEST_CASE("every listed relation holds") {
    for (const char* name : {"A3", "D4", "D5", "E7", "Dt4", "Dt5", "Et6", "Omega2", "T2_1", "T3_2", "T2_2", "T3_3"}) {
      const GroupPresentation p = dpic_describe(catalog_quiver(name));
      CAPTURE(name);
      CHECK_FALSE(p.relations.empty());
      for (const std::string& r : p.relations) {
        CAPTURE(r);
        CHECK(check_relation(p, r));
      }
    }
  }

  TEST_CASE("infinite-type presentations") {
    const GroupPresentation dt4 = dpic_describe(affine_d(4));
    CHECK_FALSE(dt4.finite_type);
    CHECK(dt4.identification == "Z x (S_4 x Z)");
    CHECK(dt4.torsion_order == 24);
    CHECK(has_relation(dt4, "(theta1 theta2)^3 = 1"));

    const GroupPresentation om = dpic_describe(omega(3));
    CHECK(contains(om.identification, "⋉ PGL_3(k)"));
    CHECK(om.action == "rho F rho^-1 = (F^-1)^t");
    CHECK(has_relation(om, "rho^2 = tau^-1"));

    const GroupPresentation t21 = dpic_describe(cycle_t(2, 1));
    CHECK(has_relation(t21, "rho^3 = tau"));
    const GroupPresentation t32 = dpic_describe(cycle_t(3, 2));
    CHECK(has_relation(t32, "rho^5 = tau^2"));
    CHECK(t32.degree_denominator == 5);
  }

  TEST_CASE("T_{p,p} exposes a nonabelian torsion") {
    // The degree-zero part of T_{3,3} is S_3, generated by an order-2 twist and
    // an order-3 rotation, so the rotation and the twist cannot commute.
    const GroupPresentation t33 = dpic_describe(cycle_t(3, 3));
    CHECK(t33.torsion_order == 6);
    CHECK(has_relation(t33, "theta^2 = 1"));
    CHECK(has_relation(t33, "zeta^3 = 1"));
    CHECK_FALSE(check_relation(t33, "rho theta rho^-1 theta^-1"));
    CHECK(check_relation(t33, "rho theta rho^-1 = theta zeta"));
  }

  TEST_CASE("fractional Calabi-Yau identity in type A") {
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(n);
      CHECK(fractional_cy_check(n));
    }
  }

  TEST_CASE("element arithmetic") {
    const GroupPresentation d5 = dpic_describe(dynkin_d(5));
    const CombinatorialElement tau = d5.realization.at("tau");
    const CombinatorialElement inv = element_invert(tau);
    const CombinatorialElement one = element_multiply(tau, inv);
    CHECK(one.map.is_identity());
    CHECK(element_equal(element_multiply(tau, tau), evaluate_word(d5, "tau^2")));
    const GroupPresentation d4 = dpic_describe(dynkin_d(4));
    CHECK_THROWS_AS(element_multiply(tau, d4.realization.at("tau")), InputError);
  }

  TEST_CASE("naming finite groups") {
    const SliceGroup d4 = aut_commuting_with_tau(dynkin_d(4));
    CHECK(name_finite_group(d4.torsion, true) == "S_3");
    const SliceGroup dt4 = aut_commuting_with_tau(affine_d(4));
    CHECK(name_finite_group(dt4.torsion, true) == "S_4");
    const SliceGroup a1 = aut_commuting_with_tau(dynkin_a(1));
    CHECK(name_finite_group(a1.torsion, true) == "1");
  }

  TEST_CASE("generated subgroups") {
    const SliceGroup t32 = aut_commuting_with_tau(cycle_t(3, 2));
    const auto rho = standard_rotation(cycle_t(3, 2));
    REQUIRE(rho.has_value());
    const SubgroupReport alone = generated_subgroup(t32, {*rho});
    CHECK(alone.covers_all_cosets);
    CHECK(alone.tau_exponent == 2);
    CHECK_FALSE(alone.is_whole_group());
    const SliceMap tau = SliceMap::tau_power(t32.delta.vertex_count(), 1);
    CHECK(generated_subgroup(t32, {*rho, tau}).is_whole_group());
    CHECK_FALSE(standard_rotation(dynkin_d(4)).has_value());
  }
}
