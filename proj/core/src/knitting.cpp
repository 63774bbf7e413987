#include "dpic/knitting.hpp"

#include <algorithm>

#include "dpic/k_theory.hpp"

namespace dpic {

DimensionVector projective_dimvec(const Quiver& delta, VertexIndex x) {
  const IntMatrix c = cartan(delta);
  DimensionVector d(delta.vertex_count());
  for (VertexIndex y = 0; y < d.size(); ++y) d[y] = static_cast<int>(c(y, x));
  return d;
}

DimensionVector injective_dimvec(const Quiver& delta, VertexIndex x) {
  const IntMatrix c = cartan(delta);
  DimensionVector d(delta.vertex_count());
  for (VertexIndex y = 0; y < d.size(); ++y) d[y] = static_cast<int>(c(x, y));
  return d;
}

bool ARQuiverModA::is_projective(ZVertex v) const {
  return std::find(projective_at.begin(), projective_at.end(), v) != projective_at.end();
}

bool ARQuiverModA::is_injective(ZVertex v) const {
  return std::find(injective_at.begin(), injective_at.end(), v) != injective_at.end();
}

bool ARQuiverModA::is_simple(ZVertex v) const {
  auto it = dimvec.find(v);
  if (it == dimvec.end()) return false;
  int total = 0;
  for (int e : it->second) total += e;
  return total == 1;
}

int ARQuiverModA::last_level() const { return positions.empty() ? 0 : positions.back().level; }

ARQuiverModA knit(const Quiver& delta) {
  const GraphType type = classify(delta);
  if (!type.is_dynkin()) {
    throw UnsupportedInput("knitting needs a Dynkin quiver, got " + type.display());
  }
  const std::size_t n = delta.vertex_count();
  const std::vector<VertexIndex> order = topological_order(delta);

  ARQuiverModA mod;
  mod.delta = delta;
  mod.type = type;
  mod.injective_at.assign(n, ZVertex{});
  for (VertexIndex x = 0; x < n; ++x) {
    mod.dimvec[{0, x, 0}] = projective_dimvec(delta, x);
    mod.projective_at.push_back({0, x, 0});
  }

  std::vector<DimensionVector> injectives(n);
  for (VertexIndex x = 0; x < n; ++x) injectives[x] = injective_dimvec(delta, x);
  std::vector<bool> injective_found(n, false);

  auto record_injective = [&](ZVertex v) {
    const DimensionVector& d = mod.dimvec.at(v);
    auto it = std::find(injectives.begin(), injectives.end(), d);
    if (it == injectives.end()) {
      throw ConsistencyError("knitting stopped at a position that is not injective");
    }
    const auto x = static_cast<VertexIndex>(it - injectives.begin());
    if (injective_found[x]) throw ConsistencyError("injective module found twice");
    injective_found[x] = true;
    mod.injective_at[x] = v;
  };

  // Level by level; inside a level the topological order makes the
  // same-level predecessors of a mesh end available.
  bool frontier_alive = true;
  for (int level = 0; frontier_alive; ++level) {
    frontier_alive = false;
    for (VertexIndex x : order) {
      const ZVertex here{level, x, 0};
      if (!mod.contains(here)) continue;
      const ZVertex next{level + 1, x, 0};
      DimensionVector d(n, 0);
      auto add = [&](ZVertex m, int times) {
        auto it = mod.dimvec.find(m);
        if (it == mod.dimvec.end()) return;
        for (std::size_t i = 0; i < n; ++i) d[i] += times * it->second[i];
      };
      for (ArrowIndex a : delta.in_arrows(x)) add({level + 1, delta.arrow(a).source, 0}, 1);
      for (ArrowIndex a : delta.out_arrows(x)) add({level, delta.arrow(a).target, 0}, 1);
      const DimensionVector& cur = mod.dimvec.at(here);
      for (std::size_t i = 0; i < n; ++i) d[i] -= cur[i];
      const bool negative = std::any_of(d.begin(), d.end(), [](int e) { return e < 0; });
      const bool zero = std::all_of(d.begin(), d.end(), [](int e) { return e == 0; });
      if (negative || zero) {
        record_injective(here);
        continue;
      }
      mod.dimvec[next] = std::move(d);
      frontier_alive = true;
    }
  }

  for (const auto& [v, d] : mod.dimvec) mod.positions.push_back(v);
  if (static_cast<int>(mod.positions.size()) != positive_root_count(type)) {
    throw ConsistencyError("knitting produced " + std::to_string(mod.positions.size()) +
                           " positions, expected " + std::to_string(positive_root_count(type)));
  }
  if (!std::all_of(injective_found.begin(), injective_found.end(), [](bool b) { return b; })) {
    throw ConsistencyError("not every injective module was located");
  }
  return mod;
}

SliceMap sigma_permutation(const ARQuiverModA& mod) {
  std::vector<ZVertex> image;
  for (const ZVertex& v : mod.injective_at) image.push_back(tau_inv(v));
  return SliceMap(std::move(image));
}

SliceMap sigma_permutation(const Quiver& delta) { return sigma_permutation(knit(delta)); }

std::string format_sigma_relation(int tau_power, int sigma_power, bool twisted) {
  std::string out = "tau";
  if (tau_power != 1) out += "^" + std::to_string(tau_power);
  out += " = ";
  if (twisted) out += "theta ";
  out += "sigma^" + std::to_string(-sigma_power);
  return out;
}

namespace {

// σ^k = twist ∘ τ^{-m} when all levels of σ^k agree and the base part
// preserves d.
std::optional<SigmaNormalForm> try_power(const Quiver& delta, const SliceMap& sigma, int k) {
  const SliceMap p = sigma.power(k);
  const int m = p.image().front().level;
  for (const ZVertex& v : p.image()) {
    if (v.level != m) return std::nullopt;
  }
  const VertexPermutation twist = p.base_permutation();
  if (!preserves_multiplicity(delta, twist)) return std::nullopt;
  SigmaNormalForm nf;
  nf.sigma_power = k;
  nf.tau_power = m;
  nf.twist = twist;
  nf.twisted = !twist.is_identity();
  nf.relation = format_sigma_relation(m, k, nf.twisted);
  return nf;
}

}  // namespace

SigmaNormalForm sigma_normal_form(const Quiver& delta) {
  const ARQuiverModA mod = knit(delta);
  const SliceMap sigma = sigma_permutation(mod);
  const std::size_t n = delta.vertex_count();

  std::optional<SigmaNormalForm> minimal;
  int k = 1;
  for (; k <= 4 && !minimal; ++k) minimal = try_power(delta, sigma, k);
  if (!minimal) throw ConsistencyError("no normal form for sigma with |k| <= 4");

  // Type A is reported in its uniform form with k = 2.
  SigmaNormalForm nf = *minimal;
  if (mod.type.series == 'A' && nf.sigma_power != 2) {
    auto two = try_power(delta, sigma, 2);
    if (!two) throw ConsistencyError("sigma^2 is not a translation in type A");
    nf = *two;
  }
  nf.minimal_sigma_power = minimal->sigma_power;
  nf.minimal_tau_power = minimal->tau_power;
  nf.minimal_relation = minimal->relation;

  // Substitute back: σ^k τ^m twist^{-1} must be the identity, exactly and on
  // a window of width 4(m+1).
  const SliceMap twist = SliceMap::from_permutation(nf.twist);
  const SliceMap check =
      sigma.power(nf.sigma_power).compose(SliceMap::tau_power(n, nf.tau_power)).compose(twist.inverse());
  const int width = 4 * (nf.tau_power + 1);
  const ZQuiverWindow window = build_window(delta, 0, width - 1);
  bool ok = check.is_identity();
  for (const ZVertex& v : window.vertices()) ok = ok && check(v) == v;
  if (!ok) throw ConsistencyError("sigma normal form does not reproduce sigma");
  return nf;
}

}  // namespace dpic
