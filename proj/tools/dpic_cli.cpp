// dpic: command line front end for the dpic core library.
//
// Exit codes: 0 ok, 1 a verification failed, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dpic/catalog.hpp"
#include "dpic/dot.hpp"
#include "dpic/dpic_groups.hpp"
#include "dpic/errors.hpp"
#include "dpic/json_report.hpp"
#include "dpic/k_theory.hpp"
#include "dpic/knitting.hpp"
#include "dpic/mesh_category.hpp"
#include "dpic/quiver_io.hpp"
#include "dpic/translation_quiver.hpp"
#include "verify_suites.hpp"

namespace {

using nlohmann::json;
using namespace dpic;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Outcome {
  json result = json::object();
  std::string text;
  bool ok = true;
  bool raw = false;  // text is emitted verbatim even with --json (DOT)
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string matrix_text(const IntMatrix& m) { return m.to_string(); }

Outcome cmd_classify(const Quiver& q) {
  const GraphType t = classify(q);
  Outcome o;
  o.result = to_json(t);
  o.text = q.name() + ": " + t.display() + "\n";
  return o;
}

Outcome cmd_aut(const Quiver& q, std::optional<int> radius) {
  Outcome o;
  const VertexAutomorphismGroup vertex_group = aut_vertices_d(q);
  const QuiverAutomorphismGroup quiver_group = aut_quiver(q);
  const SliceGroup g = aut_commuting_with_tau(q, radius);
  o.result = {{"vertex_automorphisms", vertex_group.order()},
              {"quiver_automorphisms", quiver_group.order},
              {"commuting_with_tau", to_json(g)}};
  std::ostringstream text;
  text << "|Aut(Q_0; d)| = " << vertex_group.order() << "\n"
       << "|Aut(Q)| = " << quiver_group.order << "\n"
       << "Aut(ZQ) commuting with tau, modulo tau: " << g.cosets.size() << " cosets\n"
       << "  finite part: order " << g.torsion_order() << " (" << name_finite_group(g.torsion, g.torsion_is_twists)
       << ")\n"
       << "  degrees in (1/" << g.degree_denominator << ")Z\n";
  for (const std::string& r : g.relations) text << "  " << r << "\n";
  o.text = text.str();
  return o;
}

std::optional<ARQuiverModA> maybe_knit(const Quiver& q) {
  if (!classify(q).is_dynkin()) return std::nullopt;
  return knit(q);
}

Outcome cmd_zq(const Quiver& q, int a, int b, bool dot) {
  Outcome o;
  const auto mod = maybe_knit(q);
  if (dot) {
    o.text = render_dot(q, a, b, mod ? &*mod : nullptr);
    o.raw = true;
    return o;
  }
  if (a > b) throw InputError("empty window: " + std::to_string(a) + " > " + std::to_string(b));
  const ZQuiverWindow w = build_window(q, a, b);
  o.result = to_json(w);
  std::ostringstream text;
  text << "levels [" << a << ", " << b << "]: " << w.vertices().size() << " vertices, " << w.arrows().size()
       << " arrows, " << w.meshes().size() << " meshes\n";
  for (const ZArrow& arrow : w.arrows()) {
    text << "  " << format_zarrow(q, arrow) << ": " << format_zvertex(q, arrow.source) << " -> "
         << format_zvertex(q, arrow.target) << "\n";
  }
  o.text = text.str();
  return o;
}

Outcome cmd_hom(const Quiver& q, const std::string& from, const std::string& to) {
  Outcome o;
  const ZVertex v = parse_zvertex(q, from);
  const ZVertex u = parse_zvertex(q, to);
  if (v.component != u.component || u.level < v.level) {
    o.result = {{"from", format_zvertex(q, v)}, {"to", format_zvertex(q, u)}, {"dimension", hom_dim(q, v, u)}};
    o.text = "dim Hom(" + format_zvertex(q, v) + ", " + format_zvertex(q, u) + ") = 0\n";
    return o;
  }
  const ZQuiverWindow w = hom_window(q, v, u);
  const HomSpace h = hom_space(w, v, u);
  o.result = to_json(q, h, w);
  std::ostringstream text;
  text << "dim Hom(" << format_zvertex(q, v) << ", " << format_zvertex(q, u) << ") = " << h.dimension << "  ("
       << h.path_count << " paths, relations of rank " << h.relation_rank << ")\n";
  for (const Path& p : h.quotient_basis) {
    std::vector<std::string> names;
    for (std::size_t a : p) names.push_back(format_zarrow(q, w.arrows()[a]));
    text << "  " << (names.empty() ? std::string("identity") : join(names, " . ")) << "\n";
  }
  o.text = text.str();
  return o;
}

Outcome cmd_knit(const Quiver& q, bool dot) {
  Outcome o;
  const ARQuiverModA mod = knit(q);
  if (dot) {
    o.text = render_dot(mod);
    o.raw = true;
    return o;
  }
  o.result = to_json(mod);
  std::ostringstream text;
  text << mod.type.display() << ": " << mod.positions.size() << " indecomposables\n";
  for (const ZVertex& v : mod.positions) {
    text << "  " << format_zvertex(q, v) << "  [";
    const DimensionVector& d = mod.dimvec.at(v);
    for (std::size_t i = 0; i < d.size(); ++i) text << (i ? " " : "") << d[i];
    text << "]";
    if (mod.is_projective(v)) text << " P";
    if (mod.is_injective(v)) text << " I";
    if (mod.is_simple(v)) text << " S";
    text << "\n";
  }
  o.text = text.str();
  return o;
}

Outcome cmd_sigma(const Quiver& q) {
  Outcome o;
  const SigmaNormalForm nf = sigma_normal_form(q);
  const SliceMap sigma = sigma_permutation(q);
  o.result = to_json(nf);
  o.result["sigma"] = to_json(q, sigma);
  o.text = "sigma = " + format_slice_map(q, sigma) + "\n" + nf.relation + "\n";
  if (nf.minimal_relation != nf.relation) o.text += "minimal: " + nf.minimal_relation + "\n";
  return o;
}

Outcome cmd_group(const Quiver& q, const std::optional<std::string>& word) {
  Outcome o;
  const GroupPresentation pres = dpic_describe(q);
  o.result = to_json(pres);
  std::ostringstream text;
  text << pres.type.display() << ": DPic = " << pres.identification << "\n"
       << "generators: " << join(pres.generators, ", ") << "\n"
       << "relations:\n";
  for (const std::string& r : pres.relations) text << "  " << r << "\n";
  if (!pres.action.empty()) text << "action: " << pres.action << "\n";
  if (word) {
    const bool holds = check_relation(pres, *word);
    o.result["check"] = {{"word", *word}, {"holds", holds}};
    text << "check " << *word << ": " << (holds ? "holds" : "fails") << "\n";
    o.ok = holds;
  }
  o.text = text.str();
  return o;
}

Outcome cmd_weyl(const Quiver& q, std::size_t bound) {
  Outcome o;
  const WeylGroupReport r = weyl_group(q, bound);
  o.result = to_json(r);
  o.text = r.complete ? "|W| = " + std::to_string(r.elements_found) + "\n"
                      : "closure exceeded " + std::to_string(r.bound) + " elements\n";
  return o;
}

std::vector<VertexIndex> parse_vertex_word(const Orientation& omega, const std::string& word) {
  std::vector<VertexIndex> out;
  std::stringstream in(word);
  for (std::string item; std::getline(in, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    out.push_back(omega.index_of(item));
  }
  return out;
}

Outcome cmd_reflect(const Quiver& q, const std::optional<std::string>& word) {
  Outcome o;
  const Orientation omega = Orientation::from_quiver(q);
  if (word) {
    const GroupoidWalk walk = groupoid_walk(omega, parse_vertex_word(omega, *word));
    o.result = to_json(walk);
    std::ostringstream text;
    text << "end orientation: " << join(o.result["end"].get<std::vector<std::string>>(), ", ") << "\n"
         << "accumulated: " << matrix_text(walk.accumulated) << "\n";
    if (walk.closed) {
      text << "closed walk; "
           << (walk.coxeter_exponent ? "equals Phi^" + std::to_string(*walk.coxeter_exponent)
                                     : std::string("not a power of Phi found"))
           << "\n";
      o.ok = walk.coxeter_exponent.has_value();
    }
    o.text = text.str();
    return o;
  }
  const ReflectionFactorizationReport r = verify_reflection_factorization(omega);
  std::vector<std::string> order;
  for (VertexIndex x : r.ordering) order.push_back(omega.vertex_ids[x]);
  o.result = {{"ordering", order},
              {"product", to_json(r.product)},
              {"coxeter", to_json(r.coxeter)},
              {"factorization_ok", r.factorization_ok},
              {"source_reflections_ok", r.source_reflections_ok}};
  o.text = "source-admissible ordering: " + join(order, ", ") + "\n" + "Phi = " + matrix_text(r.coxeter) + "\n" +
           "product of reflections " + (r.factorization_ok ? "equals" : "differs from") + " Phi\n" +
           "source reflections " + (r.source_reflections_ok ? "agree" : "disagree") + " with Phi^-1\n";
  o.ok = r.ok();
  return o;
}

Outcome cmd_verify(const std::string& suite, int max_rank) {
  cli::SuiteOptions opt;
  opt.max_rank = max_rank;
  if (const char* seed = std::getenv("DPIC_SEED")) {
    try {
      opt.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw InputError(std::string("DPIC_SEED is not an unsigned integer: ") + seed);
    }
  }
  const std::vector<cli::Check> checks = cli::run_suite(suite, opt);
  Outcome o;
  json rows = json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (const cli::Check& c : checks) {
    rows.push_back({{"suite", c.suite}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    text << (c.ok ? "PASS " : "FAIL ") << c.suite << " " << c.name << ": " << c.detail << "\n";
    passed += c.ok ? 1 : 0;
  }
  text << passed << "/" << checks.size() << " checks passed\n";
  o.ok = passed == checks.size();
  o.result = {{"suite", suite}, {"seed", opt.seed}, {"checks", rows}, {"passed", passed}, {"total", checks.size()}};
  o.text = text.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived Picard groups of path algebras: combinatorial computations"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "Emit a JSON report");
  app.add_flag("--timing", timing, "Report wall-clock time");

  std::string quiver_arg;
  auto quiver_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("quiver", quiver_arg, "Quiver file or @CatalogName")->required();
    return sub;
  };

  CLI::App* classify_cmd = quiver_command("classify", "Identify the underlying graph");
  std::optional<int> radius;
  CLI::App* aut_cmd = quiver_command("aut", "Automorphisms of Q and of ZQ commuting with tau");
  aut_cmd->add_option("--radius", radius, "Level radius of the slice search");

  std::vector<int> window;
  bool dot = false;
  CLI::App* zq_cmd = quiver_command("zq", "Window of the translation quiver ZQ");
  zq_cmd->add_option("--window", window, "First and last level")->expected(2)->required();
  zq_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  std::string from, to;
  CLI::App* hom_cmd = quiver_command("hom", "Hom dimension in the mesh category");
  hom_cmd->add_option("--from", from, "Source vertex \"(n,x)\"")->required();
  hom_cmd->add_option("--to", to, "Target vertex \"(m,y)\"")->required();

  CLI::App* knit_cmd = quiver_command("knit", "Knit the Auslander-Reiten quiver of mod kQ");
  knit_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  CLI::App* sigma_cmd = quiver_command("sigma", "Shift permutation and its normal form");

  std::optional<std::string> word;
  CLI::App* group_cmd = quiver_command("group", "Presentation of the derived Picard group");
  group_cmd->add_option("--word", word, "Relation or word to check, e.g. \"tau^5 = sigma^-2\"");

  std::size_t bound = 1'000'000;
  CLI::App* weyl_cmd = quiver_command("weyl", "Weyl group order by closure");
  weyl_cmd->add_option("--bound", bound, "Maximum number of elements");

  CLI::App* reflect_cmd = quiver_command("reflect", "Reflection factorization or groupoid walk");
  reflect_cmd->add_option("--word", word, "Comma separated vertices to reflect at, e.g. \"1,2\"");

  std::string suite;
  int max_rank = 8;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(dpic::cli::suite_names()));
  verify_cmd->add_option("--max-rank", max_rank, "Skip types of larger rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  json inputs = json::object();
  std::string command;
  try {
    if (verify_cmd->parsed()) {
      command = "verify";
      inputs = {{"suite", suite}, {"max_rank", max_rank}};
      outcome = cmd_verify(suite, max_rank);
    } else {
      const Quiver q = load_quiver(quiver_arg).body;
      inputs["quiver"] = quiver_arg;
      if (classify_cmd->parsed()) {
        command = "classify";
        outcome = cmd_classify(q);
      } else if (aut_cmd->parsed()) {
        command = "aut";
        if (radius) inputs["radius"] = *radius;
        outcome = cmd_aut(q, radius);
      } else if (zq_cmd->parsed()) {
        command = "zq";
        inputs["window"] = window;
        outcome = cmd_zq(q, window[0], window[1], dot);
      } else if (hom_cmd->parsed()) {
        command = "hom";
        inputs["from"] = from;
        inputs["to"] = to;
        outcome = cmd_hom(q, from, to);
      } else if (knit_cmd->parsed()) {
        command = "knit";
        outcome = cmd_knit(q, dot);
      } else if (sigma_cmd->parsed()) {
        command = "sigma";
        outcome = cmd_sigma(q);
      } else if (group_cmd->parsed()) {
        command = "group";
        if (word) inputs["word"] = *word;
        outcome = cmd_group(q, word);
      } else if (weyl_cmd->parsed()) {
        command = "weyl";
        inputs["bound"] = bound;
        outcome = cmd_weyl(q, bound);
      } else if (reflect_cmd->parsed()) {
        command = "reflect";
        if (word) inputs["word"] = *word;
        outcome = cmd_reflect(q, word);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << quiver_arg << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (outcome.raw) {
    std::cout << outcome.text;
  } else if (as_json) {
    json report = outcome.result;
    report["schema_version"] = kJsonSchemaVersion;
    report["command"] = command;
    report["inputs"] = inputs;
    report["ok"] = outcome.ok;
    if (timing) report["timing_ms"] = elapsed_ms;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << outcome.text;
    if (timing) std::cout << "time: " << elapsed_ms << " ms\n";
  }
  return outcome.ok ? kExitOk : kExitFailed;
}
