// Enumeration of τ-commuting d-preserving bijections of ZΔ by slice images.

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dpic/translation_quiver.hpp"

namespace dpic {

int default_search_radius(const Quiver& delta) { return diameter(delta) + 2; }

std::optional<std::size_t> SliceGroup::coset_of(const SliceMap& g) const {
  const SliceMap key = g.normalized();
  auto it = std::lower_bound(cosets.begin(), cosets.end(), key);
  if (it == cosets.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - cosets.begin());
}

namespace {

template <typename T, typename Mul>
std::set<T> close_under(const std::vector<T>& gens, const T& one, Mul mul) {
  std::set<T> seen{one};
  std::deque<T> queue{one};
  while (!queue.empty()) {
    const T g = queue.front();
    queue.pop_front();
    for (const T& s : gens) {
      T h = mul(s, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

// All normalized slice images: first BFS vertex lands at level 0, every other
// vertex within one level of its parent's image.
std::vector<SliceMap> enumerate_slices(const Quiver& delta, int radius) {
  const std::size_t n = delta.vertex_count();
  const SpanningOrder span = spanning_order(delta);
  const auto& order = span.order;
  std::vector<ZVertex> image(n);
  std::vector<bool> used(n, false);
  std::vector<SliceMap> found;

  // Pairwise d-profile between slice vertices x and y.
  auto compatible = [&](VertexIndex x, VertexIndex y) {
    const int shift = image[x].level - image[y].level;
    for (int offset : {0, 1, -1, shift, shift + 1, shift - 1}) {
      const ZVertex u{0, x, 0};
      const ZVertex v{offset, y, 0};
      const ZVertex fu{image[x].level, image[x].base, 0};
      const ZVertex fv{offset + image[y].level, image[y].base, 0};
      if (z_multiplicity(delta, u, v) != z_multiplicity(delta, fu, fv)) return false;
      if (z_multiplicity(delta, v, u) != z_multiplicity(delta, fv, fu)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      found.emplace_back(image);
      return;
    }
    const VertexIndex x = order[depth];
    std::vector<int> levels;
    if (depth == 0) {
      levels = {0};
    } else {
      const int pl = image[span.parent[x]].level;
      levels = {pl - 1, pl, pl + 1};
    }
    for (int level : levels) {
      if (level < -radius || level > radius) continue;
      for (VertexIndex b = 0; b < n; ++b) {
        if (used[b]) continue;
        image[x] = {level, b, 0};
        bool ok = compatible(x, x);
        for (std::size_t k = 0; ok && k < depth; ++k) ok = compatible(order[k], x);
        if (!ok) continue;
        used[b] = true;
        self(self, depth + 1);
        used[b] = false;
      }
    }
  };
  search(search, 0);
  return found;
}

}  // namespace

SliceGroup aut_commuting_with_tau(const Quiver& delta, std::optional<int> radius_opt) {
  if (delta.vertex_count() == 0) throw InputError("empty quiver");
  if (!is_connected(delta)) throw UnsupportedInput("quiver is not connected");
  if (has_oriented_cycle(delta)) throw UnsupportedInput("quiver has an oriented cycle");
  const int diam = diameter(delta);
  const int radius = radius_opt.value_or(diam + 2);
  if (radius < diam + 1) {
    throw InsufficientWindow("search radius " + std::to_string(radius) +
                             " is below diameter + 1 = " + std::to_string(diam + 1));
  }
  const std::size_t n = delta.vertex_count();

  SliceGroup group;
  group.delta = delta;
  group.radius = radius;

  const ZQuiverWindow window = build_window(delta, -radius - 2, radius + 1);
  for (SliceMap& f : enumerate_slices(delta, radius)) {
    if (!preserves_z_multiplicity(delta, f) || !validate_on_window(f, window)) {
      throw ConsistencyError("slice candidate failed window validation: " +
                             format_slice_map(delta, f));
    }
    group.cosets.push_back(f.normalized());
  }
  std::ranges::sort(group.cosets);
  group.cosets.erase(std::unique(group.cosets.begin(), group.cosets.end()), group.cosets.end());

  // Degree is N·deg; torsion is the kernel of deg.
  const int big_n = static_cast<int>(n);
  int g = big_n;
  for (const SliceMap& c : group.cosets) g = std::gcd(g, c.degree_numerator());
  group.degree_denominator = big_n / g;

  for (const SliceMap& c : group.cosets) {
    const int num = c.degree_numerator();
    if (num % big_n != 0) continue;
    // deg(c·τ^k) = num/N + k.
    group.torsion.push_back(c.compose(SliceMap::tau_power(n, -num / big_n)));
  }
  std::ranges::sort(group.torsion);
  group.torsion_is_twists =
      std::all_of(group.torsion.begin(), group.torsion.end(), [](const SliceMap& t) { return t.is_twist(); });

  auto mul = [](const SliceMap& a, const SliceMap& b) { return a.compose(b); };
  // Level-preserving twists are preferred as generators.
  std::vector<SliceMap> candidates = group.torsion;
  std::stable_partition(candidates.begin(), candidates.end(), [](const SliceMap& t) { return t.is_twist(); });
  std::size_t reached = 1;
  for (const SliceMap& t : candidates) {
    if (t.is_identity()) continue;
    auto trial = group.torsion_generators;
    trial.push_back(t);
    const std::size_t size = close_under(trial, SliceMap::identity(n), mul).size();
    if (size > reached) {
      group.torsion_generators = std::move(trial);
      reached = size;
      if (reached == group.torsion.size()) break;
    }
  }

  // Fractional generator of degree 1/D; prefer one whose D-th power is τ and
  // then one commuting with the torsion subgroup.
  const SliceMap tau1 = SliceMap::tau_power(n, 1);
  auto commutes_with_torsion = [&](const SliceMap& z) {
    return std::all_of(group.torsion.begin(), group.torsion.end(),
                       [&](const SliceMap& t) { return z.compose(t) == t.compose(z); });
  };
  const int target = g;  // numerator of degree 1/D
  int best_score = -1;
  for (const SliceMap& c : group.cosets) {
    const int num = c.degree_numerator();
    if ((target - num) % big_n != 0) continue;
    // deg(c·τ^k) = num/N + k.
    const SliceMap z = c.compose(SliceMap::tau_power(n, (target - num) / big_n));
    const bool power_ok = z.power(group.degree_denominator) == tau1;
    const bool central = commutes_with_torsion(z);
    const int score = (power_ok ? 2 : 0) + (central ? 1 : 0);
    if (score > best_score) {
      best_score = score;
      group.fractional = z;
      group.fractional_power_is_tau = power_ok;
      group.fractional_is_central = central;
    }
  }

  const std::string d = std::to_string(group.degree_denominator);
  if (group.degree_denominator > 1) {
    group.relations.push_back(group.fractional_power_is_tau ? "fractional^" + d + " = tau"
                                                            : "fractional^" + d + " in tau*torsion");
  }
  if (group.torsion.size() > 1) {
    group.relations.push_back(group.fractional_is_central ? "fractional central"
                                                          : "fractional acts on torsion");
  }
  return group;
}

std::vector<std::size_t> generated_cosets(const SliceGroup& group, const std::vector<SliceMap>& gens) {
  const std::size_t n = group.delta.vertex_count();
  std::vector<SliceMap> normalized;
  for (const SliceMap& s : gens) normalized.push_back(s.normalized());
  auto mul = [](const SliceMap& a, const SliceMap& b) { return a.compose(b).normalized(); };
  std::vector<std::size_t> out;
  for (const SliceMap& e : close_under(normalized, SliceMap::identity(n), mul)) {
    auto idx = group.coset_of(e);
    if (!idx) throw ConsistencyError("generated element is outside the enumerated group");
    out.push_back(*idx);
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace dpic
