#include "dpic/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace dpic {

VertexIndex Quiver::add_vertex(std::string id, std::string label) {
  if (id.empty()) throw InputError("vertex id must be non-empty");
  if (vertex_index_.contains(id)) throw InputError("duplicate vertex id '" + id + "'");
  if (label.empty()) label = id;
  const VertexIndex v = vertices_.size();
  vertex_index_.emplace(id, v);
  vertices_.push_back({std::move(id), std::move(label)});
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

ArrowIndex Quiver::add_arrow(std::string id, std::string_view source,
                             std::string_view target, std::string label) {
  if (id.empty()) throw InputError("arrow id must be non-empty");
  if (arrow_index_.contains(id)) throw InputError("duplicate arrow id '" + id + "'");
  const auto s = find_vertex(source);
  const auto t = find_vertex(target);
  if (!s) throw InputError("arrow '" + id + "' has unknown source '" + std::string(source) + "'");
  if (!t) throw InputError("arrow '" + id + "' has unknown target '" + std::string(target) + "'");
  if (label.empty()) label = id;
  const ArrowIndex a = arrows_.size();
  arrow_index_.emplace(id, a);
  arrows_.push_back({std::move(id), *s, *t, std::move(label)});
  out_[*s].push_back(a);
  in_[*t].push_back(a);
  return a;
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  const auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Quiver::index_of(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

int Quiver::multiplicity(VertexIndex x, VertexIndex y) const {
  if (x >= vertices_.size() || y >= vertices_.size()) throw InputError("vertex index out of range");
  int count = 0;
  for (ArrowIndex a : out_[x]) {
    if (arrows_[a].target == y) ++count;
  }
  return count;
}

int Quiver::multiplicity(std::string_view x, std::string_view y) const {
  return multiplicity(index_of(x), index_of(y));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<VertexIndex>> undirected_neighbors(const Quiver& q) {
  std::vector<std::set<VertexIndex>> nbrs(q.vertex_count());
  for (const Arrow& a : q.arrows()) {
    nbrs[a.source].insert(a.target);
    nbrs[a.target].insert(a.source);
  }
  std::vector<std::vector<VertexIndex>> out(q.vertex_count());
  for (std::size_t v = 0; v < nbrs.size(); ++v) out[v].assign(nbrs[v].begin(), nbrs[v].end());
  return out;
}

std::vector<int> bfs_distances(const std::vector<std::vector<VertexIndex>>& nbrs, VertexIndex from) {
  std::vector<int> dist(nbrs.size(), -1);
  std::deque<VertexIndex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (VertexIndex w : nbrs[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Quiver& q) {
  if (q.vertex_count() == 0) return false;
  const auto dist = bfs_distances(undirected_neighbors(q), 0);
  return std::ranges::all_of(dist, [](int d) { return d >= 0; });
}

bool has_oriented_cycle(const Quiver& q) {
  std::vector<int> indegree(q.vertex_count(), 0);
  for (const Arrow& a : q.arrows()) ++indegree[a.target];
  std::deque<VertexIndex> ready;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const VertexIndex v = ready.front();
    ready.pop_front();
    ++seen;
    for (ArrowIndex a : q.out_arrows(v)) {
      if (--indegree[q.arrow(a).target] == 0) ready.push_back(q.arrow(a).target);
    }
  }
  return seen != q.vertex_count();
}

bool is_tree(const Quiver& q) {
  if (!is_connected(q)) return false;
  if (q.arrow_count() + 1 != q.vertex_count()) return false;
  for (const Arrow& a : q.arrows()) {
    if (a.source == a.target) return false;
    if (q.multiplicity(a.source, a.target) + q.multiplicity(a.target, a.source) > 1) return false;
  }
  return true;
}

std::vector<VertexIndex> sources(const Quiver& q) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (q.in_arrows(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> sinks(const Quiver& q) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> topological_order(const Quiver& q) {
  std::vector<int> indegree(q.vertex_count(), 0);
  for (const Arrow& a : q.arrows()) ++indegree[a.target];
  std::set<VertexIndex> ready;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  std::vector<VertexIndex> order;
  while (!ready.empty()) {
    const VertexIndex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (ArrowIndex a : q.out_arrows(v)) {
      if (--indegree[q.arrow(a).target] == 0) ready.insert(q.arrow(a).target);
    }
  }
  if (order.size() != q.vertex_count()) throw UnsupportedInput("quiver has an oriented cycle");
  return order;
}

std::vector<int> underlying_degrees(const Quiver& q) {
  std::vector<int> deg(q.vertex_count(), 0);
  for (const Arrow& a : q.arrows()) {
    ++deg[a.source];
    ++deg[a.target];
  }
  return deg;
}

int diameter(const Quiver& q) {
  if (!is_connected(q)) throw UnsupportedInput("diameter requires a connected quiver");
  const auto nbrs = undirected_neighbors(q);
  int best = 0;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    const auto dist = bfs_distances(nbrs, v);
    best = std::max(best, *std::ranges::max_element(dist));
  }
  return best;
}

SpanningOrder spanning_order(const Quiver& q) {
  if (!is_connected(q)) throw UnsupportedInput("spanning order requires a connected quiver");
  const auto nbrs = undirected_neighbors(q);
  SpanningOrder result;
  result.parent.assign(q.vertex_count(), 0);
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<VertexIndex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    result.order.push_back(v);
    for (VertexIndex w : nbrs[v]) {
      if (!seen[w]) {
        seen[w] = true;
        result.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string GraphType::code() const {
  switch (family) {
    case GraphFamily::Dynkin: return std::string(1, series) + std::to_string(n);
    case GraphFamily::AffineTree: return std::string(1, series) + "t" + std::to_string(n);
    case GraphFamily::AffineCycle: return "T" + std::to_string(p) + "_" + std::to_string(q);
    case GraphFamily::MultiArrow: return "Omega" + std::to_string(n);
    case GraphFamily::Other: break;
  }
  return "Other";
}

std::string GraphType::display() const {
  switch (family) {
    case GraphFamily::Dynkin: return std::string(1, series) + "_" + std::to_string(n);
    case GraphFamily::AffineTree: return std::string(1, series) + "~_" + std::to_string(n);
    case GraphFamily::AffineCycle:
      return "T_{" + std::to_string(p) + "," + std::to_string(q) + "}";
    case GraphFamily::MultiArrow: return "Omega_" + std::to_string(n);
    case GraphFamily::Other: break;
  }
  return "Other";
}

namespace {

GraphType make_type(GraphFamily family, char series, int n) {
  GraphType t;
  t.family = family;
  t.series = series;
  t.n = n;
  return t;
}

// Number of vertices on the arm starting at `first`, walking away from
// `center` until a leaf or another branch vertex.
int arm_length(const std::vector<std::vector<VertexIndex>>& nbrs, VertexIndex center,
               VertexIndex first, VertexIndex* end = nullptr) {
  int length = 1;
  VertexIndex prev = center;
  VertexIndex cur = first;
  while (nbrs[cur].size() == 2) {
    const VertexIndex next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  if (end) *end = cur;
  return length;
}

GraphType classify_tree(const Quiver& q) {
  const auto nbrs = undirected_neighbors(q);
  const int n = static_cast<int>(q.vertex_count());
  std::vector<VertexIndex> branch;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (nbrs[v].size() >= 3) branch.push_back(v);
  }
  if (branch.empty()) return make_type(GraphFamily::Dynkin, 'A', n);

  if (branch.size() == 1) {
    const VertexIndex c = branch[0];
    std::vector<int> arms;
    for (VertexIndex w : nbrs[c]) arms.push_back(arm_length(nbrs, c, w));
    std::ranges::sort(arms);
    if (arms.size() == 4) {
      if (arms == std::vector<int>{1, 1, 1, 1}) return make_type(GraphFamily::AffineTree, 'D', 4);
      return {};
    }
    if (arms.size() != 3) return {};
    const int a = arms[0], b = arms[1], c3 = arms[2];
    if (a == 1 && b == 1) return make_type(GraphFamily::Dynkin, 'D', c3 + 3);
    if (a == 1 && b == 2 && c3 == 2) return make_type(GraphFamily::Dynkin, 'E', 6);
    if (a == 1 && b == 2 && c3 == 3) return make_type(GraphFamily::Dynkin, 'E', 7);
    if (a == 1 && b == 2 && c3 == 4) return make_type(GraphFamily::Dynkin, 'E', 8);
    if (a == 2 && b == 2 && c3 == 2) return make_type(GraphFamily::AffineTree, 'E', 6);
    if (a == 1 && b == 3 && c3 == 3) return make_type(GraphFamily::AffineTree, 'E', 7);
    if (a == 1 && b == 2 && c3 == 5) return make_type(GraphFamily::AffineTree, 'E', 8);
    return {};
  }

  if (branch.size() == 2) {
    for (VertexIndex c : branch) {
      if (nbrs[c].size() != 3) return {};
      int leaves = 0;
      for (VertexIndex w : nbrs[c]) {
        if (nbrs[w].size() == 1) ++leaves;
      }
      if (leaves != 2) return {};
    }
    return make_type(GraphFamily::AffineTree, 'D', n - 1);
  }
  return {};
}

GraphType classify_cycle(const Quiver& q) {
  const auto nbrs = undirected_neighbors(q);
  int forward = 0;
  int backward = 0;
  VertexIndex prev = 0;
  VertexIndex cur = nbrs[0][0];
  forward += q.multiplicity(0, cur);
  backward += q.multiplicity(cur, 0);
  while (cur != 0) {
    const VertexIndex next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
    forward += q.multiplicity(cur, next);
    backward += q.multiplicity(next, cur);
    prev = cur;
    cur = next;
  }
  GraphType t;
  t.family = GraphFamily::AffineCycle;
  t.series = 'T';
  t.p = std::max(forward, backward);
  t.q = std::min(forward, backward);
  t.n = t.p + t.q - 1;
  return t;
}

}  // namespace

GraphType classify(const Quiver& q) {
  if (!is_connected(q)) throw UnsupportedInput("classify: quiver is empty or disconnected");
  if (has_oriented_cycle(q)) throw UnsupportedInput("classify: quiver has an oriented cycle");

  bool multi_edge = false;
  for (const Arrow& a : q.arrows()) {
    if (q.multiplicity(a.source, a.target) + q.multiplicity(a.target, a.source) > 1) multi_edge = true;
  }
  if (multi_edge) {
    if (q.vertex_count() == 2 && q.arrow_count() >= 2) {
      const VertexIndex s = q.arrow(0).source;
      const bool one_direction = std::ranges::all_of(
          q.arrows(), [s](const Arrow& a) { return a.source == s; });
      if (one_direction) return make_type(GraphFamily::MultiArrow, 'O', static_cast<int>(q.arrow_count()));
    }
    return {};
  }

  if (q.arrow_count() + 1 == q.vertex_count()) return classify_tree(q);

  if (q.arrow_count() == q.vertex_count() && q.vertex_count() >= 3) {
    const auto deg = underlying_degrees(q);
    if (std::ranges::all_of(deg, [](int d) { return d == 2; })) return classify_cycle(q);
  }
  return {};
}

int positive_root_count(const GraphType& type) {
  if (!type.is_dynkin()) throw UnsupportedInput("positive_root_count: not a Dynkin type");
  switch (type.series) {
    case 'A': return type.n * (type.n + 1) / 2;
    case 'D': return type.n * (type.n - 1);
    case 'E':
      if (type.n == 6) return 36;
      if (type.n == 7) return 63;
      if (type.n == 8) return 120;
      break;
    default: break;
  }
  throw UnsupportedInput("positive_root_count: unknown type " + type.display());
}

// ---------------------------------------------------------------------------

VertexPermutation VertexPermutation::identity(std::size_t n) {
  VertexPermutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), VertexIndex{0});
  return p;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& inner) const {
  if (inner.size() != size()) throw InputError("compose: permutation size mismatch");
  VertexPermutation out;
  out.image.resize(size());
  for (std::size_t i = 0; i < size(); ++i) out.image[i] = image.at(inner.image[i]);
  return out;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation out;
  out.image.resize(size());
  for (std::size_t i = 0; i < size(); ++i) out.image.at(image[i]) = i;
  return out;
}

bool VertexPermutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (image[i] != i) return false;
  }
  return true;
}

bool VertexPermutation::is_bijection() const {
  std::vector<bool> hit(size(), false);
  for (VertexIndex v : image) {
    if (v >= size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

int VertexPermutation::order() const {
  int k = 1;
  VertexPermutation p = *this;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

bool preserves_multiplicity(const Quiver& q, const VertexPermutation& pi) {
  if (pi.size() != q.vertex_count() || !pi.is_bijection()) return false;
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    for (VertexIndex y = 0; y < q.vertex_count(); ++y) {
      if (q.multiplicity(pi(x), pi(y)) != q.multiplicity(x, y)) return false;
    }
  }
  return true;
}

namespace {

std::vector<VertexPermutation> closure(const std::vector<VertexPermutation>& gens, std::size_t n) {
  std::set<VertexPermutation> seen{VertexPermutation::identity(n)};
  std::deque<VertexPermutation> queue{VertexPermutation::identity(n)};
  while (!queue.empty()) {
    const VertexPermutation g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto h = s.compose(g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

VertexAutomorphismGroup aut_vertices_d(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  VertexAutomorphismGroup group;
  if (n == 0) {
    group.elements.push_back({});
    return group;
  }

  std::vector<std::tuple<int, int, int>> signature(n);
  for (VertexIndex v = 0; v < n; ++v) {
    signature[v] = {static_cast<int>(q.in_arrows(v).size()),
                    static_cast<int>(q.out_arrows(v).size()), q.multiplicity(v, v)};
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n));
  for (VertexIndex x = 0; x < n; ++x) {
    for (VertexIndex y = 0; y < n; ++y) d[x][y] = q.multiplicity(x, y);
  }

  // Assign images in breadth-first order so multiplicity pruning bites early.
  std::vector<VertexIndex> order;
  if (is_connected(q)) {
    order = spanning_order(q).order;
  } else {
    order.resize(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
  }

  std::vector<VertexIndex> image(n, n);
  std::vector<bool> used(n, false);
  std::vector<VertexPermutation> found;

  auto consistent = [&](std::size_t depth, VertexIndex candidate) {
    const VertexIndex v = order[depth];
    if (signature[candidate] != signature[v]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const VertexIndex w = order[k];
      if (d[candidate][image[w]] != d[v][w]) return false;
      if (d[image[w]][candidate] != d[w][v]) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      found.push_back({image});
      return;
    }
    const VertexIndex v = order[depth];
    for (VertexIndex c = 0; c < n; ++c) {
      if (used[c] || !consistent(depth, c)) continue;
      used[c] = true;
      image[v] = c;
      self(self, depth + 1);
      used[c] = false;
      image[v] = n;
    }
  };
  search(search, 0);

  std::ranges::sort(found);
  group.elements = found;
  std::size_t reached = 1;
  for (const auto& g : found) {
    if (g.is_identity()) continue;
    auto trial = group.generators;
    trial.push_back(g);
    const auto span = closure(trial, n);
    if (span.size() > reached) {
      group.generators = std::move(trial);
      reached = span.size();
      if (reached == found.size()) break;
    }
  }
  return group;
}

bool is_quiver_automorphism(const Quiver& q, const QuiverAutomorphism& f) {
  if (!f.vertices.is_bijection() || f.vertices.size() != q.vertex_count()) return false;
  if (f.arrows.size() != q.arrow_count()) return false;
  std::vector<bool> hit(q.arrow_count(), false);
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const ArrowIndex b = f.arrows[a];
    if (b >= q.arrow_count() || hit[b]) return false;
    hit[b] = true;
    if (q.arrow(b).source != f.vertices(q.arrow(a).source)) return false;
    if (q.arrow(b).target != f.vertices(q.arrow(a).target)) return false;
  }
  return true;
}

namespace {

std::vector<ArrowIndex> parallel_arrows(const Quiver& q, VertexIndex x, VertexIndex y) {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a : q.out_arrows(x)) {
    if (q.arrow(a).target == y) out.push_back(a);
  }
  return out;
}

}  // namespace

QuiverAutomorphism lift_to_quiver(const Quiver& q, const VertexPermutation& pi) {
  if (!preserves_multiplicity(q, pi)) throw InputError("lift_to_quiver: permutation does not preserve d");
  QuiverAutomorphism f{pi, std::vector<ArrowIndex>(q.arrow_count())};
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    for (VertexIndex y = 0; y < q.vertex_count(); ++y) {
      const auto from = parallel_arrows(q, x, y);
      const auto to = parallel_arrows(q, pi(x), pi(y));
      for (std::size_t k = 0; k < from.size(); ++k) f.arrows[from[k]] = to[k];
    }
  }
  return f;
}

QuiverAutomorphismGroup aut_quiver(const Quiver& q) {
  const auto vertex_group = aut_vertices_d(q);
  QuiverAutomorphismGroup group;
  group.order = vertex_group.order();
  for (const auto& g : vertex_group.generators) group.generators.push_back(lift_to_quiver(q, g));

  const auto identity = lift_to_quiver(q, VertexPermutation::identity(q.vertex_count()));
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    for (VertexIndex y = 0; y < q.vertex_count(); ++y) {
      const auto parallel = parallel_arrows(q, x, y);
      for (std::size_t k = 2; k <= parallel.size(); ++k) group.order *= k;
      for (std::size_t k = 0; k + 1 < parallel.size(); ++k) {
        auto swap = identity;
        std::swap(swap.arrows[parallel[k]], swap.arrows[parallel[k + 1]]);
        group.generators.push_back(std::move(swap));
      }
    }
  }
  return group;
}

}  // namespace dpic
