#include "dpic/dpic_groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "dpic/catalog.hpp"

namespace dpic {

// ---------------------------------------------------------------------------
// Symbolic factors

std::string SymbolicFactor::tag_name() const {
  switch (tag) {
    case Tag::Trivial: return "Trivial";
    case Tag::MultiplicativeGroup: return "MultiplicativeGroup";
    case Tag::PGL: return "PGL";
    case Tag::UpperTriangular2: return "UpperTriangular2";
    case Tag::SemidirectByOrder2OnTorus: return "SemidirectByOrder2OnTorus";
    case Tag::FiniteSymmetric: return "FiniteSymmetric";
    case Tag::WreathLike: return "WreathLike";
    case Tag::FreeAbelian: return "FreeAbelian";
    case Tag::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string SymbolicFactor::display() const {
  switch (tag) {
    case Tag::Trivial: return "1";
    case Tag::MultiplicativeGroup: return "k^x";
    case Tag::PGL: return "PGL_" + std::to_string(parameter) + "(k)";
    case Tag::UpperTriangular2: return "[k^x k; 0 1]";
    case Tag::SemidirectByOrder2OnTorus: return "S_2 ⋉ k^x";
    case Tag::FiniteSymmetric: return "S_" + std::to_string(parameter);
    case Tag::WreathLike: return "S_2 ⋉ S_2^2";
    case Tag::FreeAbelian: return parameter == 1 ? "Z" : "Z^" + std::to_string(parameter);
    case Tag::Unknown: return "?";
  }
  return "?";
}

std::vector<std::string> SymbolicFactor::symbols() const {
  switch (tag) {
    case Tag::PGL: return {"F"};
    case Tag::MultiplicativeGroup:
    case Tag::SemidirectByOrder2OnTorus: return {"a"};
    case Tag::UpperTriangular2: return {"a", "b"};
    case Tag::Unknown: return {"F"};
    default: return {};
  }
}

SymbolicFactor out0_description(const Quiver& q) {
  using Tag = SymbolicFactor::Tag;
  const GraphType t = classify(q);
  switch (t.family) {
    case GraphFamily::Dynkin:
    case GraphFamily::AffineTree: return {Tag::Trivial, 0};
    case GraphFamily::MultiArrow: return {Tag::PGL, t.n};
    case GraphFamily::AffineCycle:
      if (t.q == 1) return t.p == 1 ? SymbolicFactor{Tag::PGL, 2} : SymbolicFactor{Tag::UpperTriangular2, 0};
      return {Tag::MultiplicativeGroup, 0};
    case GraphFamily::Other: return is_tree(q) ? SymbolicFactor{Tag::Trivial, 0} : SymbolicFactor{Tag::Unknown, 0};
  }
  return {Tag::Unknown, 0};
}

// ---------------------------------------------------------------------------
// Element arithmetic

namespace {

void require_same(const CombinatorialElement& a, const CombinatorialElement& b) {
  if (!a.delta || !b.delta || !(a.delta == b.delta || *a.delta == *b.delta)) {
    throw InputError("elements live over different quivers");
  }
}

}  // namespace

CombinatorialElement element_multiply(const CombinatorialElement& a, const CombinatorialElement& b) {
  require_same(a, b);
  return {a.delta, a.map.compose(b.map)};
}

CombinatorialElement element_invert(const CombinatorialElement& a) { return {a.delta, a.map.inverse()}; }

bool element_equal(const CombinatorialElement& a, const CombinatorialElement& b) {
  require_same(a, b);
  // The slice {0} x Δ_0 in component 0 is a fundamental domain for <τ, σ>.
  const std::size_t n = a.delta->vertex_count();
  for (VertexIndex x = 0; x < n; ++x) {
    if (a.map(ZVertex{0, x, 0}) != b.map(ZVertex{0, x, 0})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite group names

std::string name_finite_group(const std::vector<SliceMap>& elements, bool twists) {
  const std::size_t order = elements.size();
  if (order == 0) return "1";
  const std::size_t n = elements.front().size();
  bool abelian = true;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (a.compose(b) != b.compose(a)) abelian = false;
    }
  }
  std::map<int, int> histogram;
  for (const auto& g : elements) {
    int k = 1;
    SliceMap p = g;
    while (!p.is_identity()) {
      p = p.compose(g);
      ++k;
    }
    ++histogram[k];
  }
  (void)n;
  const int involutions = histogram.count(2) ? histogram[2] : 0;
  const std::string two = twists ? "S_2" : "Z/2Z";
  if (order == 1) return "1";
  if (order == 2) return two;
  if (abelian) {
    const int max_order = histogram.rbegin()->first;
    if (static_cast<std::size_t>(max_order) == order) return "Z/" + std::to_string(order) + "Z";
    if (order == 4 && involutions == 3) return twists ? "S_2^2" : "(Z/2Z)^2";
    return "abelian group of order " + std::to_string(order);
  }
  if (order == 6) return "S_3";
  if (order == 8 && involutions == 5) return "S_2 ⋉ S_2^2";
  if (order == 24 && involutions == 9) return "S_4";
  return "group of order " + std::to_string(order);
}

// ---------------------------------------------------------------------------
// Subgroups of the enumerated group

SubgroupReport generated_subgroup(const SliceGroup& group, const std::vector<SliceMap>& gens) {
  SubgroupReport report;
  // Schreier transversal: one element of the subgroup per reached coset.
  std::map<std::size_t, SliceMap> rep;
  const std::size_t n = group.delta.vertex_count();
  const SliceMap one = SliceMap::identity(n);
  auto first = group.coset_of(one);
  if (!first) throw ConsistencyError("identity is missing from the enumerated group");
  rep.emplace(*first, one);
  std::deque<std::size_t> queue{*first};
  int e = 0;
  std::vector<SliceMap> all_gens = gens;
  for (const SliceMap& g : gens) all_gens.push_back(g.inverse());
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    const SliceMap h = rep.at(c);
    for (const SliceMap& s : all_gens) {
      const SliceMap sh = s.compose(h);
      auto target = group.coset_of(sh);
      if (!target) throw ConsistencyError("generator leaves the enumerated group");
      auto it = rep.find(*target);
      if (it == rep.end()) {
        rep.emplace(*target, sh);
        queue.push_back(*target);
        continue;
      }
      // Schreier element, a power of τ.
      const SliceMap t = it->second.inverse().compose(sh);
      const int j = -t.image().front().level;
      if (t != SliceMap::tau_power(n, j)) throw ConsistencyError("Schreier element is not a power of tau");
      e = std::gcd(e, std::abs(j));
    }
  }
  report.cosets_reached = rep.size();
  report.covers_all_cosets = rep.size() == group.cosets.size();
  report.tau_exponent = e;
  return report;
}

std::optional<SliceMap> standard_rotation(const Quiver& q) {
  const GraphType t = classify(q);
  std::vector<ZVertex> image;
  if (t.family == GraphFamily::MultiArrow) {
    Quiver ref = omega(t.n);
    ref.set_name(q.name());
    if (!(ref == q)) return std::nullopt;
    image = {{0, 1, 0}, {1, 0, 0}};
  } else if (t.family == GraphFamily::AffineCycle) {
    Quiver ref = cycle_t(t.p, t.q);
    ref.set_name(q.name());
    if (!(ref == q)) return std::nullopt;
    const int p = t.p;
    const int qq = t.q;
    const std::size_t n = static_cast<std::size_t>(p + qq);
    image.resize(n);
    // Vertex i has index i - 1; the last vertex of the β path is p + q.
    image[0] = {-1, n - 1, 0};
    for (int i = 2; i <= p + 1; ++i) image[i - 1] = {0, static_cast<VertexIndex>(i - 2), 0};
    for (int i = p + 2; i <= p + qq; ++i) image[i - 1] = {-1, static_cast<VertexIndex>(i - 2), 0};
  } else {
    return std::nullopt;
  }
  return SliceMap(std::move(image));
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

std::string power_word(const std::string& name, int k) {
  if (k == 0) return "1";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

// Shortest words for the elements of a finite group in the given generators.
std::map<SliceMap, std::string> word_table(const std::vector<std::pair<std::string, SliceMap>>& gens,
                                           std::size_t n) {
  std::map<SliceMap, std::string> words;
  const SliceMap one = SliceMap::identity(n);
  words[one] = "1";
  std::deque<SliceMap> queue{one};
  while (!queue.empty()) {
    const SliceMap g = queue.front();
    queue.pop_front();
    for (const auto& [name, s] : gens) {
      const SliceMap h = g.compose(s);
      if (words.count(h)) continue;
      const std::string& w = words[g];
      words[h] = w == "1" ? name : w + " " + name;
      queue.push_back(h);
    }
  }
  // "a a b" -> "a^2 b"
  for (auto& [g, w] : words) {
    std::istringstream in(w);
    std::vector<std::pair<std::string, int>> runs;
    for (std::string tok; in >> tok;) {
      if (!runs.empty() && runs.back().first == tok) {
        ++runs.back().second;
      } else {
        runs.emplace_back(tok, 1);
      }
    }
    std::string out;
    for (const auto& [tok, k] : runs) out += (out.empty() ? "" : " ") + power_word(tok, k);
    w = out;
  }
  return words;
}

int element_order(const SliceMap& g) {
  int k = 1;
  for (SliceMap p = g; !p.is_identity(); p = p.compose(g)) ++k;
  return k;
}

struct Namer {
  GroupPresentation& pres;
  std::shared_ptr<const Quiver> delta;
  void add(const std::string& name, const SliceMap& map) {
    pres.generators.push_back(name);
    pres.realization[name] = CombinatorialElement{delta, map};
  }
};

// Torsion generators named theta (twists) or zeta (others).
std::vector<std::pair<std::string, SliceMap>> name_torsion(const SliceGroup& group) {
  std::vector<std::pair<std::string, SliceMap>> out;
  auto stem_of = [](const SliceMap& t) { return std::string(t.is_twist() ? "theta" : "zeta"); };
  std::map<std::string, int> total;
  for (const SliceMap& t : group.torsion_generators) ++total[stem_of(t)];
  std::map<std::string, int> seen;
  for (const SliceMap& t : group.torsion_generators) {
    const std::string stem = stem_of(t);
    const int k = ++seen[stem];
    out.emplace_back(total[stem] == 1 ? stem : stem + std::to_string(k), t);
  }
  return out;
}

void add_torsion_relations(GroupPresentation& pres, const std::vector<std::pair<std::string, SliceMap>>& torsion,
                           const std::string& frac_name, const std::optional<SliceMap>& frac, std::size_t n) {
  for (const auto& [name, t] : torsion) pres.relations.push_back(power_word(name, element_order(t)) + " = 1");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      const auto& [a, ta] = torsion[i];
      const auto& [b, tb] = torsion[j];
      if (ta.compose(tb) == tb.compose(ta)) {
        pres.relations.push_back(a + " " + b + " = " + b + " " + a);
      } else {
        if (element_order(ta) == 2 && element_order(tb) == 2) {
          pres.relations.push_back("(" + a + " " + b + ")^" + std::to_string(element_order(ta.compose(tb))) + " = 1");
        } else {
          const auto words = word_table(torsion, n);
          pres.relations.push_back(a + " " + b + " " + a + "^-1 = " + words.at(ta.compose(tb).compose(ta.inverse())));
        }
      }
    }
  }
  if (!frac) return;
  const auto words = word_table(torsion, n);
  for (const auto& [name, t] : torsion) {
    const SliceMap conj = frac->compose(t).compose(frac->inverse());
    if (conj == t) {
      pres.relations.push_back(frac_name + " " + name + " = " + name + " " + frac_name);
    } else {
      pres.relations.push_back(frac_name + " " + name + " " + frac_name + "^-1 = " + words.at(conj));
    }
  }
}

// Smallest k > 0 with g^k in <τ>, returned with the τ-exponent.
std::pair<int, int> power_into_tau(const SliceMap& g, int bound) {
  const std::size_t n = g.size();
  SliceMap p = g;
  for (int k = 1; k <= bound; ++k, p = p.compose(g)) {
    const int j = -p.image().front().level;
    if (p == SliceMap::tau_power(n, j)) return {k, j};
  }
  throw ConsistencyError("no power of the fractional generator lies in <tau>");
}

std::string combinatorial_name(const std::string& torsion, bool central) {
  if (torsion == "1") return "Z";
  const bool compound = torsion.find(' ') != std::string::npos;
  const std::string t = compound ? "(" + torsion + ")" : torsion;
  return central ? t + " x Z" : "Z ⋉ " + t;
}

}  // namespace

GroupPresentation dpic_describe(const Quiver& q) {
  GroupPresentation pres;
  auto delta = std::make_shared<const Quiver>(q);
  pres.delta = delta;
  pres.type = classify(q);
  pres.finite_type = pres.type.is_dynkin();
  const std::size_t n = q.vertex_count();
  Namer namer{pres, delta};

  const SliceGroup group = aut_commuting_with_tau(q);
  pres.torsion_order = group.torsion_order();
  pres.torsion_name = name_finite_group(group.torsion, group.torsion_is_twists);
  pres.degree_denominator = group.degree_denominator;
  pres.fractional_central = group.fractional_is_central;
  const auto torsion = name_torsion(group);

  namer.add("tau", SliceMap::tau_power(n, 1));

  if (pres.finite_type) {
    const SigmaNormalForm nf = sigma_normal_form(q);
    pres.sigma_form = nf;
    const SliceMap sigma = sigma_permutation(q);
    namer.add("sigma", sigma);
    // θ in the relation is the twist of the normal form.
    std::vector<std::pair<std::string, SliceMap>> twists;
    if (nf.twisted) {
      twists.emplace_back("theta", SliceMap::from_permutation(nf.twist));
      for (const auto& [name, t] : torsion) {
        if (t.is_twist() && t != twists.front().second) twists.emplace_back(name == "theta" ? "theta2" : name, t);
      }
    } else {
      for (const auto& [name, t] : torsion) {
        if (t.is_twist()) twists.push_back({name, t});
      }
    }
    for (const auto& [name, t] : twists) namer.add(name, t);

    std::vector<SliceMap> gens = {SliceMap::tau_power(n, 1), sigma};
    for (const auto& tw : twists) gens.push_back(tw.second);
    if (!generated_subgroup(group, gens).is_whole_group()) {
      throw ConsistencyError("tau, sigma and the twists do not generate the automorphism group");
    }
    pres.relations.push_back(nf.relation);
    if (nf.minimal_relation != nf.relation) pres.relations.push_back(nf.minimal_relation);
    add_torsion_relations(pres, twists, "sigma", sigma, n);
    pres.combinatorial_identification = pres.torsion_name == "1"
                                            ? "Z"
                                            : combinatorial_name(pres.torsion_name, group.fractional_is_central);
    pres.identification = pres.combinatorial_identification;
    pres.factors = {out0_description(q)};
    return pres;
  }

  // Infinite type: σ shifts components and generates a free factor.
  namer.add("sigma", SliceMap::sigma_shift(n, 1));

  std::string frac_name = is_tree(q) ? "eta" : "rho";
  std::optional<SliceMap> frac;
  std::vector<SliceMap> torsion_maps;
  for (const auto& tw : torsion) torsion_maps.push_back(tw.second);
  auto generates_with = [&](const SliceMap& f) {
    std::vector<SliceMap> gens = torsion_maps;
    gens.push_back(SliceMap::tau_power(n, 1));
    gens.push_back(f);
    return generated_subgroup(group, gens).is_whole_group();
  };
  if (auto r = standard_rotation(q); r && group.coset_of(*r) && generates_with(*r)) {
    frac = *r;
  } else if (group.degree_denominator > 1 || !is_tree(q)) {
    frac = group.fractional;
  }
  if (frac) namer.add(frac_name, *frac);
  for (const auto& [name, t] : torsion) namer.add(name, t);

  std::vector<SliceMap> gens = {SliceMap::tau_power(n, 1)};
  if (frac) gens.push_back(*frac);
  for (const auto& tw : torsion) gens.push_back(tw.second);
  if (!generated_subgroup(group, gens).is_whole_group()) {
    throw ConsistencyError("the named generators do not generate the automorphism group");
  }

  if (frac) {
    const auto [k, j] = power_into_tau(*frac, group.degree_denominator * static_cast<int>(group.torsion_order()) + 1);
    pres.relations.push_back(power_word(frac_name, k) + " = " + power_word("tau", j));
  }
  add_torsion_relations(pres, torsion, frac_name, frac, n);
  for (const std::string& g : pres.generators) {
    if (g != "sigma") pres.relations.push_back("sigma " + g + " = " + g + " sigma");
  }

  pres.combinatorial_identification = combinatorial_name(pres.torsion_name, group.fractional_is_central);
  const SymbolicFactor out0 = out0_description(q);
  pres.factors = {out0, SymbolicFactor{SymbolicFactor::Tag::FreeAbelian, 1}};
  using Tag = SymbolicFactor::Tag;
  const std::string& comb = pres.combinatorial_identification;
  switch (out0.tag) {
    case Tag::Trivial: pres.identification = "Z x (" + comb + ")"; break;
    case Tag::PGL:
      pres.action = "rho F rho^-1 = (F^-1)^t";
      pres.identification = "Z x (" + (comb == "Z" ? std::string("Z") : "(" + comb + ")") + " ⋉ " + out0.display() + ")";
      break;
    case Tag::UpperTriangular2:
      pres.action = "rho [a b; 0 1] rho^-1 = [a -b; 0 1]";
      pres.identification = "Z x (" + (comb == "Z" ? std::string("Z") : "(" + comb + ")") + " ⋉ " + out0.display() + ")";
      break;
    case Tag::MultiplicativeGroup: {
      // ρ acts trivially; twists invert the torus.
      const bool has_twist = std::any_of(torsion.begin(), torsion.end(),
                                         [](const auto& t) { return t.second.is_twist(); });
      if (comb == "Z") {
        pres.identification = "Z^2 x k^x";
      } else if (pres.torsion_name == "S_2" && has_twist) {
        pres.action = "theta a theta^-1 = a^-1";
        pres.identification = "Z^2 x (S_2 ⋉ k^x)";
      } else {
        pres.action = "theta a theta^-1 = a^-1";
        pres.identification = "Z x ((" + comb + ") ⋉ k^x)";
      }
      break;
    }
    default: pres.identification = "Z x ((" + comb + ") ⋉ " + out0.display() + ")"; break;
  }
  return pres;
}

// ---------------------------------------------------------------------------
// Words

namespace {

// product := factor*;  factor := (NAME | '(' product ')') ['^' INT]
class WordParser {
 public:
  WordParser(const GroupPresentation& pres, std::string_view text) : pres_(pres), text_(text) {}

  SliceMap parse() {
    SliceMap out = product();
    if (pos_ != text_.size()) throw InputError("unbalanced ')' in word");
    return out;
  }

 private:
  bool is_sep(char c) const { return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ','; }
  void skip() {
    while (pos_ < text_.size() && is_sep(text_[pos_])) ++pos_;
  }

  SliceMap product() {
    SliceMap acc = SliceMap::identity(pres_.delta->vertex_count());
    for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) acc = acc.compose(factor());
    return acc;
  }

  SliceMap factor() {
    SliceMap base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = product();
      if (pos_ >= text_.size()) throw InputError("missing ')' in word");
      ++pos_;
    } else {
      std::size_t j = pos_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      if (j == pos_) throw InputError("unexpected character '" + std::string(1, text_[pos_]) + "' in word");
      base = lookup(std::string(text_.substr(pos_, j - pos_)));
      pos_ = j;
    }
    return base.power(exponent());
  }

  int exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    std::size_t j = ++pos_;
    if (j < text_.size() && (text_[j] == '-' || text_[j] == '+')) ++j;
    while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
    const char* begin = text_.data() + pos_ + (pos_ < text_.size() && text_[pos_] == '+' ? 1 : 0);
    int e = 0;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + j, e);
    if (ec != std::errc{} || ptr != text_.data() + j) throw InputError("malformed exponent in word");
    pos_ = j;
    return e;
  }

  SliceMap lookup(const std::string& name) const {
    const std::size_t n = pres_.delta->vertex_count();
    if (name == "1") return SliceMap::identity(n);
    if (auto it = pres_.realization.find(name); it != pres_.realization.end()) return it->second.map;
    for (const SymbolicFactor& f : pres_.factors) {
      const auto syms = f.symbols();
      if (std::find(syms.begin(), syms.end(), name) != syms.end()) {
        throw UnsupportedInput("'" + name + "' belongs to the symbolic factor " + f.display() +
                               ", which has no permutation realization");
      }
    }
    throw InputError("unknown generator '" + name + "'");
  }

  const GroupPresentation& pres_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

CombinatorialElement evaluate_side(const GroupPresentation& pres, std::string_view text) {
  return CombinatorialElement{pres.delta, WordParser(pres, text).parse()};
}

}  // namespace

CombinatorialElement evaluate_word(const GroupPresentation& pres, std::string_view word) {
  if (auto eq = word.find('='); eq != std::string_view::npos) {
    const CombinatorialElement lhs = evaluate_side(pres, word.substr(0, eq));
    const CombinatorialElement rhs = evaluate_side(pres, word.substr(eq + 1));
    return element_multiply(lhs, element_invert(rhs));
  }
  return evaluate_side(pres, word);
}

bool check_relation(const GroupPresentation& pres, std::string_view word) {
  const CombinatorialElement e = evaluate_word(pres, word);
  if (!e.map.is_identity()) return false;
  // Independent confirmation on a window around the slice.
  const ZQuiverWindow window = build_window(*pres.delta, -2, 2);
  for (const ZVertex& v : window.vertices()) {
    if (e.map(v) != v) return false;
  }
  return true;
}

bool fractional_cy_check(int n) {
  const Quiver q = dynkin_a(n);
  const std::size_t size = q.vertex_count();
  const SliceMap sigma = sigma_permutation(q);
  const SliceMap tau = SliceMap::tau_power(size, 1);
  const SliceMap serre = tau.compose(sigma);
  return serre.power(n + 1) == sigma.power(n - 1);
}

}  // namespace dpic
