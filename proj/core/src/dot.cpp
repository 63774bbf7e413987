#include "dpic/dot.hpp"

#include <sstream>

namespace dpic {

namespace {

std::string header(const Quiver& delta) {
  std::ostringstream out;
  out << "digraph \"Z" << delta.name() << "\" {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=plaintext, fontsize=10];\n";
  return out.str();
}

std::string annotation(const ARQuiverModA* mod, ZVertex v) {
  if (!mod || !mod->contains(v)) return {};
  const Quiver& delta = mod->delta;
  std::string tags;
  auto add = [&](char kind, VertexIndex x) {
    tags += tags.empty() ? "" : " ";
    tags += kind;
    tags += delta.vertex(x).id;
  };
  for (VertexIndex x = 0; x < mod->projective_at.size(); ++x) {
    if (mod->projective_at[x] == v) add('P', x);
  }
  for (VertexIndex x = 0; x < mod->injective_at.size(); ++x) {
    if (mod->injective_at[x] == v) add('I', x);
  }
  if (mod->is_simple(v)) {
    const DimensionVector& d = mod->dimvec.at(v);
    for (VertexIndex x = 0; x < d.size(); ++x) {
      if (d[x] == 1) add('S', x);
    }
  }
  return tags;
}

void emit_vertex(std::ostringstream& out, const Quiver& delta, ZVertex v, const ARQuiverModA* mod) {
  const std::string name = format_zvertex(delta, v);
  std::string label = name;
  if (const std::string tags = annotation(mod, v); !tags.empty()) label += "\\n" + tags;
  out << "  \"" << name << "\" [label=\"" << label << "\", pos=\"" << v.level << ",-" << v.base << "!\"";
  if (mod && mod->contains(v)) out << ", fontcolor=blue";
  out << "];\n";
}

void emit_arrow(std::ostringstream& out, const Quiver& delta, const ZArrow& a) {
  out << "  \"" << format_zvertex(delta, a.source) << "\" -> \"" << format_zvertex(delta, a.target)
      << "\" [label=\"" << delta.arrow(a.arrow).id << (a.starred ? "*" : "") << "\"];\n";
}

}  // namespace

std::string render_dot(const ZQuiverWindow& window, const ARQuiverModA* mod) {
  const Quiver& delta = window.generator();
  std::ostringstream out;
  out << header(delta);
  for (const ZVertex& v : window.vertices()) emit_vertex(out, delta, v, mod);
  for (const ZArrow& a : window.arrows()) emit_arrow(out, delta, a);
  out << "}\n";
  return out.str();
}

std::string render_dot(const Quiver& delta, int a, int b, const ARQuiverModA* mod) {
  if (a > b) return header(delta) + "}\n";
  return render_dot(build_window(delta, a, b), mod);
}

std::string render_dot(const ARQuiverModA& mod) {
  const Quiver& delta = mod.delta;
  const ZQuiverWindow window = build_window(delta, 0, mod.last_level());
  std::ostringstream out;
  out << header(delta);
  for (const ZVertex& v : mod.positions) emit_vertex(out, delta, v, &mod);
  for (const ZArrow& arrow : window.arrows()) {
    if (mod.contains(arrow.source) && mod.contains(arrow.target)) emit_arrow(out, delta, arrow);
  }
  out << "}\n";
  return out.str();
}

}  // namespace dpic
