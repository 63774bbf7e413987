#include "dpic/quiver_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dpic/catalog.hpp"

namespace dpic {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Kind { Word, String, Colon, Arrow };

struct Token {
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool word_char(std::string_view line, std::size_t i) {
  const char c = line[i];
  if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '"' || c == '#') return false;
  if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') return false;
  return true;
}

std::vector<Token> lex(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == ':') {
      out.push_back({Kind::Colon, ":", i + 1});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Kind::Arrow, "->", i + 1});
      i += 2;
    } else if (c == '"') {
      const std::size_t start = i;
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          text += line[i + 1];
          i += 2;
        } else if (line[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          text += line[i++];
        }
      }
      if (!closed) throw ParseError("unterminated string", line_no, start + 1);
      out.push_back({Kind::String, std::move(text), start + 1});
    } else {
      const std::size_t start = i;
      while (i < line.size() && word_char(line, i)) ++i;
      out.push_back({Kind::Word, std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

QuiverDocument parse_quiver(std::string_view text) {
  // Catalog shortcut.
  {
    std::size_t b = 0;
    while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    std::size_t e = text.size();
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string_view body = text.substr(b, e - b);
    if (!body.empty() && body.front() == '@' && body.find_first_of(" \t\n") == std::string_view::npos) {
      QuiverDocument doc;
      doc.body = catalog_quiver(body);
      doc.name = doc.body.name();
      return doc;
    }
  }

  struct PendingVertex {
    std::string id;
    std::string label;
  };
  struct PendingArrow {
    std::string id, source, target, label;
    SourceSpan source_span, target_span;
  };
  QuiverDocument doc;
  std::vector<PendingVertex> vertices;
  std::map<std::string, std::size_t> vertex_pos;
  std::vector<PendingArrow> arrows;
  bool have_name = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = nl + 1;
    const auto tokens = lex(line, line_no);
    if (tokens.empty()) continue;
    const std::size_t eol = line.size() + 1;
    auto expect = [&](std::size_t i, Kind kind, const char* what) -> const Token& {
      if (i >= tokens.size()) throw ParseError(std::string("expected ") + what, line_no, eol);
      if (tokens[i].kind != kind) throw ParseError(std::string("expected ") + what, line_no, tokens[i].column);
      return tokens[i];
    };
    auto no_more = [&](std::size_t i) {
      if (i < tokens.size()) throw ParseError("unexpected '" + tokens[i].text + "'", line_no, tokens[i].column);
    };
    auto declare = [&](const Token& t) {
      if (vertex_pos.count(t.text)) throw ParseError("duplicate vertex '" + t.text + "'", line_no, t.column);
      vertex_pos[t.text] = vertices.size();
      vertices.push_back({t.text, {}});
      doc.vertex_spans[t.text] = {line_no, t.column};
    };

    const Token& head = tokens[0];
    if (head.kind != Kind::Word) throw ParseError("expected a statement keyword", line_no, head.column);
    if (head.text == "quiver") {
      if (have_name) throw ParseError("quiver name given twice", line_no, head.column);
      doc.name = expect(1, Kind::Word, "a quiver name").text;
      no_more(2);
      have_name = true;
    } else if (head.text == "vertices") {
      if (tokens.size() == 1) throw ParseError("expected vertex ids", line_no, eol);
      for (std::size_t i = 1; i < tokens.size(); ++i) declare(expect(i, Kind::Word, "a vertex id"));
    } else if (head.text == "vertex") {
      const Token& id = expect(1, Kind::Word, "a vertex id");
      if (!vertex_pos.count(id.text)) declare(id);
      if (tokens.size() > 2) vertices[vertex_pos[id.text]].label = expect(2, Kind::String, "a quoted label").text;
      no_more(3);
    } else if (head.text == "arrow") {
      PendingArrow a;
      const Token& id = expect(1, Kind::Word, "an arrow id");
      a.id = id.text;
      if (doc.arrow_spans.count(a.id)) throw ParseError("duplicate arrow '" + a.id + "'", line_no, id.column);
      expect(2, Kind::Colon, "':'");
      const Token& src = expect(3, Kind::Word, "a source vertex");
      expect(4, Kind::Arrow, "'->'");
      const Token& dst = expect(5, Kind::Word, "a target vertex");
      a.source = src.text;
      a.target = dst.text;
      a.source_span = {line_no, src.column};
      a.target_span = {line_no, dst.column};
      if (tokens.size() > 6) a.label = expect(6, Kind::String, "a quoted label").text;
      no_more(7);
      doc.arrow_spans[a.id] = {line_no, id.column};
      arrows.push_back(std::move(a));
    } else {
      throw ParseError("unknown statement '" + head.text + "'", line_no, head.column);
    }
  }

  Quiver q(doc.name);
  for (const auto& v : vertices) q.add_vertex(v.id, v.label);
  for (const auto& a : arrows) {
    if (!vertex_pos.count(a.source)) {
      throw ParseError("arrow '" + a.id + "' starts at undeclared vertex '" + a.source + "'", a.source_span.line,
                       a.source_span.column);
    }
    if (!vertex_pos.count(a.target)) {
      throw ParseError("arrow '" + a.id + "' ends at undeclared vertex '" + a.target + "'", a.target_span.line,
                       a.target_span.column);
    }
    q.add_arrow(a.id, a.source, a.target, a.label);
  }
  doc.body = std::move(q);
  return doc;
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  if (!q.name().empty()) out << "quiver " << q.name() << '\n';
  if (q.vertex_count() > 0) {
    out << "vertices";
    for (const Vertex& v : q.vertices()) out << ' ' << v.id;
    out << '\n';
  }
  for (const Vertex& v : q.vertices()) {
    if (!v.label.empty()) out << "vertex " << v.id << ' ' << quote(v.label) << '\n';
  }
  for (const Arrow& a : q.arrows()) {
    out << "arrow " << a.id << ": " << q.vertex(a.source).id << " -> " << q.vertex(a.target).id;
    if (!a.label.empty()) out << ' ' << quote(a.label);
    out << '\n';
  }
  return out.str();
}

std::string serialize_quiver(const QuiverDocument& doc) {
  Quiver q = doc.body;
  q.set_name(doc.name);
  return serialize_quiver(q);
}

QuiverDocument load_quiver(const std::string& path_or_catalog) {
  if (!path_or_catalog.empty() && path_or_catalog.front() == '@') return parse_quiver(path_or_catalog);
  std::ifstream in(path_or_catalog);
  if (!in) throw InputError("cannot open '" + path_or_catalog + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

}  // namespace dpic
