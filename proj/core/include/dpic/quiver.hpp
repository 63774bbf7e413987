#ifndef DPIC_QUIVER_HPP
#define DPIC_QUIVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dpic/errors.hpp"

namespace dpic {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Vertex {
  std::string id;
  std::string label;

  bool operator==(const Vertex&) const = default;
};

struct Arrow {
  std::string id;
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::string label;

  bool operator==(const Arrow&) const = default;
};

// A finite quiver. Vertices and arrows keep their insertion order, which is
// the display order everywhere (DOT output, JSON, canonical orderings).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::string name) : name_(std::move(name)) {}

  VertexIndex add_vertex(std::string id, std::string label = {});
  ArrowIndex add_arrow(std::string id, std::string_view source,
                       std::string_view target, std::string label = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Arrow> arrows() const { return arrows_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  // Throws InputError for unknown ids.
  VertexIndex index_of(std::string_view id) const;

  // d(x, y): the number of arrows x -> y.
  int multiplicity(VertexIndex x, VertexIndex y) const;
  int multiplicity(std::string_view x, std::string_view y) const;

  std::span<const ArrowIndex> out_arrows(VertexIndex v) const { return out_.at(v); }
  std::span<const ArrowIndex> in_arrows(VertexIndex v) const { return in_.at(v); }

  // Structural equality: same vertices and arrows in the same order.
  bool operator==(const Quiver& other) const {
    return name_ == other.name_ && vertices_ == other.vertices_ &&
           arrows_ == other.arrows_;
  }

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, ArrowIndex> arrow_index_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
};

// Graph predicates on the underlying (multi)graph.
bool is_connected(const Quiver& q);
bool has_oriented_cycle(const Quiver& q);
// Underlying graph is a simple tree (connected, no multiple edges, no cycles).
bool is_tree(const Quiver& q);
std::vector<VertexIndex> sources(const Quiver& q);
std::vector<VertexIndex> sinks(const Quiver& q);
// Kahn order preferring the smallest file index. Throws UnsupportedInput on
// oriented cycles.
std::vector<VertexIndex> topological_order(const Quiver& q);
// Number of edges at each vertex of the underlying graph, counted with
// multiplicity.
std::vector<int> underlying_degrees(const Quiver& q);
// Longest shortest path in the underlying graph. Requires connectivity.
int diameter(const Quiver& q);
// Breadth-first order from vertex 0 with parents (parent of the root is
// itself).
struct SpanningOrder {
  std::vector<VertexIndex> order;
  std::vector<VertexIndex> parent;
};
SpanningOrder spanning_order(const Quiver& q);

// ---------------------------------------------------------------------------
// Classification against the catalogued families.

enum class GraphFamily { Dynkin, AffineTree, AffineCycle, MultiArrow, Other };

struct GraphType {
  GraphFamily family = GraphFamily::Other;
  // 'A', 'D', 'E' for tree families, 'T' for cycles, 'O' for Omega_n.
  char series = '?';
  int n = 0;  // rank index (A_n, D_n, E_n, D~_n, E~_n, Omega_n)
  int p = 0;  // cycle normal form T_{p,q}
  int q = 0;

  bool is_dynkin() const { return family == GraphFamily::Dynkin; }
  // Short ascii code: "A4", "E8", "Dt5", "Et6", "T3_2", "Omega3", "Other".
  std::string code() const;
  // Human readable: "A_4", "D~_5", "T_{3,2}", "Omega_3".
  std::string display() const;

  bool operator==(const GraphType&) const = default;
};

// Throws UnsupportedInput for disconnected or oriented-cyclic input.
GraphType classify(const Quiver& q);

// Number of positive roots of a Dynkin type (equivalently the number of
// indecomposable modules).
int positive_root_count(const GraphType& type);

// ---------------------------------------------------------------------------
// Automorphisms.

struct VertexPermutation {
  std::vector<VertexIndex> image;

  static VertexPermutation identity(std::size_t n);
  std::size_t size() const { return image.size(); }
  VertexIndex operator()(VertexIndex v) const { return image.at(v); }
  // (*this) after inner: x -> this(inner(x)).
  VertexPermutation compose(const VertexPermutation& inner) const;
  VertexPermutation inverse() const;
  bool is_identity() const;
  bool is_bijection() const;
  int order() const;

  auto operator<=>(const VertexPermutation&) const = default;
};

// Membership in Aut(Q_0; d).
bool preserves_multiplicity(const Quiver& q, const VertexPermutation& pi);

struct VertexAutomorphismGroup {
  std::vector<VertexPermutation> generators;
  std::vector<VertexPermutation> elements;  // sorted lexicographically
  std::size_t order() const { return elements.size(); }
};

// Aut(Q_0; d) by backtracking with degree and multiplicity pruning.
VertexAutomorphismGroup aut_vertices_d(const Quiver& q);

struct QuiverAutomorphism {
  VertexPermutation vertices;
  std::vector<ArrowIndex> arrows;  // arrow a -> arrows[a]

  bool operator==(const QuiverAutomorphism&) const = default;
};

bool is_quiver_automorphism(const Quiver& q, const QuiverAutomorphism& f);

struct QuiverAutomorphismGroup {
  std::vector<QuiverAutomorphism> generators;
  std::uint64_t order = 0;
};

// Canonical section of Aut(Q) -> Aut(Q_0; d): the k-th arrow x -> y goes to
// the k-th arrow pi(x) -> pi(y), in file order.
QuiverAutomorphism lift_to_quiver(const Quiver& q, const VertexPermutation& pi);

// Generators: lifts of the vertex generators plus adjacent transpositions
// inside every class of parallel arrows.
QuiverAutomorphismGroup aut_quiver(const Quiver& q);

}  // namespace dpic

#endif  // DPIC_QUIVER_HPP
