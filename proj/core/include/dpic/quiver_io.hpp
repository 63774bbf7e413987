#ifndef DPIC_QUIVER_IO_HPP
#define DPIC_QUIVER_IO_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "dpic/errors.hpp"
#include "dpic/quiver.hpp"

namespace dpic {

// Syntax error with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct QuiverDocument {
  std::string name;
  Quiver body;
  // Where each vertex and arrow was declared; empty for catalog input.
  std::map<std::string, SourceSpan> vertex_spans;
  std::map<std::string, SourceSpan> arrow_spans;

  // Spans are diagnostics only and do not take part in equality.
  bool operator==(const QuiverDocument& other) const {
    return name == other.name && body == other.body;
  }
};

// Grammar, one statement per line, '#' starts a comment:
//   quiver NAME
//   vertices ID ID ...
//   vertex ID "label"
//   arrow ID: SRC -> DST ["label"]
// A document consisting of a single "@Name" token is a catalog lookup.
QuiverDocument parse_quiver(std::string_view text);
std::string serialize_quiver(const QuiverDocument& doc);
std::string serialize_quiver(const Quiver& q);

// Reads the file, or resolves "@Name" without touching the filesystem.
QuiverDocument load_quiver(const std::string& path_or_catalog);

}  // namespace dpic

#endif  // DPIC_QUIVER_IO_HPP
