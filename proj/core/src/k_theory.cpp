#include "dpic/k_theory.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

namespace dpic {

IntMatrix cartan(const Quiver& q) {
  const std::vector<VertexIndex> order = topological_order(q);
  const std::size_t n = q.vertex_count();
  IntMatrix c(n, n);
  // Paths from x: process targets in topological order.
  for (VertexIndex x = 0; x < n; ++x) {
    c(x, x) = 1;
    for (VertexIndex v : order) {
      if (c(x, v) == 0) continue;
      for (ArrowIndex a : q.out_arrows(v)) c(x, q.arrow(a).target) += c(x, v);
    }
  }
  return c;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  const IntMatrix c = cartan(q);
  return -(c.inverse() * c.transpose());
}

IntMatrix reflection(const Quiver& graph, VertexIndex x) {
  const std::size_t n = graph.vertex_count();
  if (x >= n) throw InputError("unknown vertex index " + std::to_string(x));
  IntMatrix s = IntMatrix::identity(n);
  s(x, x) = -1;
  for (VertexIndex y = 0; y < n; ++y) {
    if (y == x) continue;
    s(y, x) += graph.multiplicity(x, y) + graph.multiplicity(y, x);
  }
  return s;
}

IntMatrix reflection(const Quiver& graph, std::string_view x) { return reflection(graph, graph.index_of(x)); }

WeylGroupReport weyl_group(const Quiver& graph, std::size_t element_bound) {
  WeylGroupReport report;
  report.bound = element_bound;
  const std::size_t n = graph.vertex_count();
  for (VertexIndex x = 0; x < n; ++x) report.generators.push_back(reflection(graph, x));

  std::unordered_set<IntMatrix, IntMatrixHash> seen{IntMatrix::identity(n)};
  std::deque<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    if (seen.size() > element_bound) {
      report.elements_found = seen.size();
      return report;
    }
    const IntMatrix g = std::move(frontier.front());
    frontier.pop_front();
    for (const IntMatrix& s : report.generators) {
      IntMatrix h = s * g;
      if (seen.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  report.elements_found = seen.size();
  report.complete = true;
  return report;
}

std::vector<std::vector<std::int64_t>> positive_roots(const Quiver& graph, std::size_t bound) {
  const std::size_t n = graph.vertex_count();
  std::vector<IntMatrix> gens;
  for (VertexIndex x = 0; x < n; ++x) gens.push_back(reflection(graph, x).transpose());
  using Vec = std::vector<std::int64_t>;
  std::set<Vec> orbit;
  std::deque<Vec> queue;
  for (VertexIndex x = 0; x < n; ++x) {
    Vec e(n, 0);
    e[x] = 1;
    if (orbit.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    if (orbit.size() > bound) throw UnsupportedInput("root orbit exceeds bound; graph is not Dynkin");
    const Vec v = queue.front();
    queue.pop_front();
    for (const IntMatrix& s : gens) {
      Vec w = s * v;
      if (orbit.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<Vec> out;
  for (const Vec& v : orbit) {
    if (std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e >= 0; })) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

Orientation Orientation::from_quiver(const Quiver& q) {
  Orientation o;
  for (const Vertex& v : q.vertices()) o.vertex_ids.push_back(v.id);
  for (const Arrow& a : q.arrows()) {
    o.arrow_ids.push_back(a.id);
    o.arrows.emplace_back(a.source, a.target);
  }
  return o;
}

Quiver Orientation::to_quiver(std::string name) const {
  Quiver q(std::move(name));
  for (const std::string& id : vertex_ids) q.add_vertex(id);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    q.add_arrow(arrow_ids[i], vertex_ids[arrows[i].first], vertex_ids[arrows[i].second]);
  }
  return q;
}

bool Orientation::is_source(VertexIndex x) const {
  return std::none_of(arrows.begin(), arrows.end(), [&](const auto& a) { return a.second == x; });
}

VertexIndex Orientation::index_of(std::string_view id) const {
  auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
  if (it == vertex_ids.end()) throw InputError("unknown vertex '" + std::string(id) + "'");
  return static_cast<VertexIndex>(it - vertex_ids.begin());
}

std::vector<VertexIndex> source_admissible_ordering(const Orientation& omega) {
  Orientation current = omega;
  std::vector<VertexIndex> order;
  std::vector<bool> done(omega.vertex_count(), false);
  for (std::size_t step = 0; step < omega.vertex_count(); ++step) {
    VertexIndex pick = omega.vertex_count();
    for (VertexIndex x = 0; x < omega.vertex_count(); ++x) {
      if (!done[x] && current.is_source(x)) {
        pick = x;
        break;
      }
    }
    if (pick == omega.vertex_count()) throw UnsupportedInput("orientation has an oriented cycle");
    done[pick] = true;
    order.push_back(pick);
    current = bgp_reflect(current, pick);
  }
  return order;
}

Orientation bgp_reflect(const Orientation& omega, VertexIndex x) {
  if (x >= omega.vertex_count()) throw InputError("unknown vertex index " + std::to_string(x));
  if (!omega.is_source(x)) {
    throw PreconditionError("vertex " + omega.vertex_ids[x] + " is not a source");
  }
  Orientation out = omega;
  for (auto& a : out.arrows) {
    if (a.first == x) std::swap(a.first, a.second);
  }
  return out;
}

ReflectionFactorizationReport verify_reflection_factorization(const Orientation& omega) {
  const Quiver q = omega.to_quiver();
  const std::size_t n = q.vertex_count();
  ReflectionFactorizationReport report;
  report.ordering = source_admissible_ordering(omega);
  report.coxeter = coxeter_matrix(q);
  report.product = IntMatrix::identity(n);
  for (VertexIndex x : report.ordering) report.product = reflection(q, x) * report.product;
  report.factorization_ok = report.product == report.coxeter;

  const IntMatrix inv = report.coxeter.inverse();
  report.source_reflections_ok = true;
  for (VertexIndex x : sources(q)) {
    std::vector<IntMatrix::Entry> e(n, 0);
    e[x] = 1;
    if (inv * e != reflection(q, x) * e) report.source_reflections_ok = false;
  }
  return report;
}

GroupoidWalk groupoid_walk(const Orientation& omega, const std::vector<VertexIndex>& word) {
  const Quiver q = omega.to_quiver();
  const std::size_t n = q.vertex_count();
  GroupoidWalk walk{omega, word, omega, IntMatrix::identity(n), false, std::nullopt};
  for (VertexIndex x : word) {
    walk.end = bgp_reflect(walk.end, x);
    walk.accumulated = reflection(q, x) * walk.accumulated;
  }
  walk.closed = walk.end == walk.start;
  if (walk.closed) {
    const IntMatrix phi = coxeter_matrix(q);
    const IntMatrix phi_inv = phi.inverse();
    const int bound = static_cast<int>(word.size()) + 1;
    IntMatrix up = IntMatrix::identity(n);
    IntMatrix down = IntMatrix::identity(n);
    for (int j = 0; j <= bound; ++j) {
      if (up == walk.accumulated) {
        walk.coxeter_exponent = j;
        break;
      }
      if (down == walk.accumulated) {
        walk.coxeter_exponent = -j;
        break;
      }
      up = phi * up;
      down = phi_inv * down;
    }
  }
  return walk;
}

Quiver random_tree_orientation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Quiver q("RandomTree" + std::to_string(n));
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 2; i <= n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(1, i - 1);
    const std::string a = std::to_string(pick(rng));
    const std::string b = std::to_string(i);
    const bool forward = std::bernoulli_distribution(0.5)(rng);
    q.add_arrow("a" + std::to_string(i - 1), forward ? a : b, forward ? b : a);
  }
  return q;
}

bool verify_coxeter_relation(const Quiver& q, int tau_power, int sigma_power,
                             const std::vector<std::size_t>& twist) {
  const IntMatrix lhs = coxeter_matrix(q).power(tau_power);
  IntMatrix rhs = IntMatrix::permutation(twist);
  if (sigma_power % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace dpic
