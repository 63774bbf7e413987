#include "verify_suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>
#include <set>

#include "dpic/catalog.hpp"
#include "dpic/dpic_groups.hpp"
#include "dpic/k_theory.hpp"
#include "dpic/knitting.hpp"
#include "dpic/reference_tables.hpp"
#include "dpic/translation_quiver.hpp"

namespace dpic::cli {

namespace {

using Suite = std::function<void(const SuiteOptions&, std::vector<Check>&)>;

// Runs `body` and records a failed check instead of propagating exceptions,
// so that one bad row does not hide the others.
void guarded(std::vector<Check>& out, const std::string& suite, const std::string& name,
             const std::function<Check()>& body) {
  try {
    Check c = body();
    c.suite = suite;
    c.name = name;
    out.push_back(std::move(c));
  } catch (const std::exception& e) {
    out.push_back({suite, name, false, std::string("exception: ") + e.what()});
  }
}

void table1(const SuiteOptions& opt, std::vector<Check>& out) {
  for (const std::string& name : finite_type_names()) {
    const Quiver q = catalog_quiver(name);
    const GraphType type = classify(q);
    if (type.n > opt.max_rank) continue;
    guarded(out, "table1", name, [&] {
      const SigmaNormalForm nf = sigma_normal_form(q);
      const std::string expected = *known_sigma_relation(type);
      const GroupPresentation pres = dpic_describe(q);
      const bool holds = check_relation(pres, nf.relation);
      return Check{{}, {}, nf.relation == expected && holds,
                   nf.relation + (holds ? " (holds)" : " (fails)") + ", expected " + expected};
    });
  }
}

void table2(const SuiteOptions& opt, std::vector<Check>& out) {
  for (const std::string& name : affine_type_names()) {
    const Quiver q = catalog_quiver(name);
    const GraphType type = classify(q);
    if (type.n > opt.max_rank) continue;
    guarded(out, "table2", name, [&] {
      const SliceGroup g = aut_commuting_with_tau(q);
      const std::size_t expected = *known_torsion_order(type);
      bool ok = g.torsion_order() == expected;
      std::string detail = "torsion " + std::to_string(g.torsion_order()) + ", expected " + std::to_string(expected);
      if (known_half_translation(type)) {
        const bool half = g.degree_denominator == 2 && g.fractional.power(2) == SliceMap::tau_power(q.vertex_count(), 1);
        ok = ok && half;
        detail += half ? "; eta^2 = tau" : "; no eta with eta^2 = tau";
      }
      return Check{{}, {}, ok, detail};
    });
  }
}

void kzero(const SuiteOptions& opt, std::vector<Check>& out) {
  for (const std::string& name : finite_type_names()) {
    const Quiver q = catalog_quiver(name);
    if (classify(q).n > opt.max_rank) continue;
    guarded(out, "kzero", name, [&] {
      const SigmaNormalForm nf = sigma_normal_form(q);
      const bool ok = verify_coxeter_relation(q, nf.tau_power, nf.sigma_power, nf.twist.image);
      const std::string sign = nf.sigma_power % 2 ? "-" : "";
      const std::string rhs = nf.twisted ? sign + "P_theta" : sign + "I";
      return Check{{}, {}, ok, "Phi^" + std::to_string(nf.tau_power) + " = " + rhs};
    });
  }
}

void coxeter(const SuiteOptions& opt, std::vector<Check>& out) {
  auto run = [&](const std::string& name, const Quiver& q) {
    guarded(out, "coxeter", name, [&] {
      const ReflectionFactorizationReport r = verify_reflection_factorization(Orientation::from_quiver(q));
      return Check{{}, {}, r.ok(), r.ok() ? "product of reflections = Phi" : "Phi = " + r.coxeter.to_string() +
                                                                                  ", product = " + r.product.to_string()};
    });
  };
  for (const std::string& name : catalog_names()) {
    const Quiver q = catalog_quiver(name);
    if (is_tree(q)) run(name, q);
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t s = rng();
    const std::size_t n = size(rng);
    run("random-" + std::to_string(n) + "-" + std::to_string(s), random_tree_orientation(n, s));
  }
}

void roots(const SuiteOptions& opt, std::vector<Check>& out) {
  for (const char* name : {"A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    const Quiver q = catalog_quiver(name);
    const GraphType type = classify(q);
    if (type.n > opt.max_rank) continue;
    guarded(out, "roots", name, [&] {
      const ARQuiverModA mod = knit(q);
      const auto expected = static_cast<std::size_t>(positive_root_count(type));
      bool ok = mod.positions.size() == expected;
      std::string detail = std::to_string(mod.positions.size()) + " positions, expected " + std::to_string(expected);
      if (type.n <= 6) {
        std::set<std::vector<std::int64_t>> knitted;
        for (const auto& [v, d] : mod.dimvec) knitted.insert(std::vector<std::int64_t>(d.begin(), d.end()));
        const auto reflected = positive_roots(q);
        const bool same = knitted == std::set<std::vector<std::int64_t>>(reflected.begin(), reflected.end());
        ok = ok && same;
        detail += same ? "; dimension vectors = positive roots" : "; dimension vectors differ from positive roots";
      }
      return Check{{}, {}, ok, detail};
    });
  }
}

void weyl(const SuiteOptions& opt, std::vector<Check>& out) {
  for (const char* name : {"A2", "A3", "D4", "E6"}) {
    const Quiver q = catalog_quiver(name);
    const GraphType type = classify(q);
    if (type.n > opt.max_rank) continue;
    guarded(out, "weyl", name, [&] {
      const WeylGroupReport r = weyl_group(q);
      const std::uint64_t expected = *known_weyl_order(type);
      return Check{{}, {}, r.complete && r.elements_found == expected,
                   "|W| = " + std::to_string(r.elements_found) + ", expected " + std::to_string(expected)};
    });
  }
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"table1", table1}, {"table2", table2}, {"kzero", kzero},
      {"coxeter", coxeter}, {"roots", roots}, {"weyl", weyl},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<Check> out;
  for (const auto& [suite, fn] : suites()) {
    if (name == "all" || name == suite) fn(options, out);
  }
  return out;
}

}  // namespace dpic::cli
