#include "dpic/translation_quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace dpic {

std::string format_zvertex(const Quiver& delta, ZVertex v) {
  std::ostringstream out;
  out << '(';
  if (v.component != 0) out << v.component << ';';
  out << v.level << ',' << delta.vertex(v.base).id << ')';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw InputError("malformed vertex '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ZVertex parse_zvertex(const Quiver& delta, std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InputError("vertex must look like (n,x): '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  ZVertex v;
  if (auto semi = s.find(';'); semi != std::string_view::npos) {
    v.component = parse_int(s.substr(0, semi), text);
    s = s.substr(semi + 1);
  }
  auto comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw InputError("vertex must look like (n,x): '" + std::string(text) + "'");
  }
  v.level = parse_int(s.substr(0, comma), text);
  v.base = delta.index_of(trim(s.substr(comma + 1)));
  return v;
}

int z_multiplicity(const Quiver& delta, ZVertex u, ZVertex v) {
  if (u.component != v.component) return 0;
  if (v.level == u.level) return delta.multiplicity(u.base, v.base);
  if (v.level == u.level + 1) return delta.multiplicity(v.base, u.base);
  return 0;
}

std::string format_zarrow(const Quiver& delta, const ZArrow& a) {
  std::ostringstream out;
  out << '(';
  if (a.component != 0) out << a.component << ';';
  out << a.level << ',' << delta.arrow(a.arrow).id << (a.starred ? "*" : "") << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

ZQuiverWindow::ZQuiverWindow(Quiver generator, int first_level, int last_level, int component)
    : generator_(std::move(generator)),
      first_level_(first_level),
      last_level_(last_level),
      component_(component) {
  if (first_level_ > last_level_) {
    throw InputError("window [" + std::to_string(first_level_) + "," +
                     std::to_string(last_level_) + "] is empty");
  }
  if (has_oriented_cycle(generator_)) {
    throw UnsupportedInput("quiver has an oriented cycle");
  }
  const std::size_t n = generator_.vertex_count();
  for (int level = first_level_; level <= last_level_; ++level) {
    for (VertexIndex x = 0; x < n; ++x) vertices_.push_back({level, x, component_});
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());

  auto push = [&](ZArrow arrow) {
    const std::size_t idx = arrows_.size();
    arrow_lookup_[{arrow.level, arrow.arrow, arrow.starred}] = idx;
    out_[index_of(arrow.source)].push_back(idx);
    in_[index_of(arrow.target)].push_back(idx);
    arrows_.push_back(arrow);
  };
  for (int level = first_level_; level <= last_level_; ++level) {
    for (ArrowIndex a = 0; a < generator_.arrow_count(); ++a) {
      const Arrow& arr = generator_.arrow(a);
      push({level, a, false, component_, {level, arr.source, component_},
            {level, arr.target, component_}});
    }
    if (level + 1 > last_level_) continue;
    for (ArrowIndex a = 0; a < generator_.arrow_count(); ++a) {
      const Arrow& arr = generator_.arrow(a);
      push({level, a, true, component_, {level, arr.target, component_},
            {level + 1, arr.source, component_}});
    }
  }
}

bool ZQuiverWindow::contains(ZVertex v) const {
  return v.component == component_ && v.level >= first_level_ && v.level <= last_level_ &&
         v.base < generator_.vertex_count();
}

std::size_t ZQuiverWindow::index_of(ZVertex v) const {
  if (!contains(v)) {
    throw RangeError("vertex " + format_zvertex(generator_, v) + " lies outside the window [" +
                     std::to_string(first_level_) + "," + std::to_string(last_level_) + "]");
  }
  return static_cast<std::size_t>(v.level - first_level_) * generator_.vertex_count() + v.base;
}

int ZQuiverWindow::multiplicity(ZVertex u, ZVertex v) const {
  int count = 0;
  for (std::size_t a : out_arrows(u)) {
    if (arrows_[a].target == v) ++count;
  }
  return count;
}

std::optional<std::size_t> ZQuiverWindow::find_arrow(int level, ArrowIndex arrow, bool starred) const {
  auto it = arrow_lookup_.find({level, arrow, starred});
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ZQuiverWindow::polarization(std::size_t arrow_index) const {
  const ZArrow& a = arrows_.at(arrow_index);
  const int level = a.starred ? a.level : a.level - 1;
  auto image = find_arrow(level, a.arrow, !a.starred);
  if (!image) {
    throw RangeError("polarization of " + format_zarrow(generator_, a) + " leaves the window");
  }
  return *image;
}

std::vector<Mesh> ZQuiverWindow::meshes() const {
  std::vector<Mesh> result;
  for (const ZVertex& y : vertices_) {
    if (y.level - 1 < first_level_) continue;
    Mesh mesh{tau(y), y, {}};
    for (std::size_t beta : in_arrows(y)) {
      const ZVertex x = arrows_[beta].source;
      auto it = std::find_if(mesh.middles.begin(), mesh.middles.end(),
                             [&](const MeshMiddle& m) { return m.vertex == x; });
      if (it == mesh.middles.end()) {
        mesh.middles.push_back({x, {}, {}});
        it = std::prev(mesh.middles.end());
      }
      it->betas.push_back(beta);
      it->alphas.push_back(polarization(beta));
    }
    result.push_back(std::move(mesh));
  }
  return result;
}

ZQuiverWindow ZQuiverWindow::restrict_to(int first_level, int last_level) const {
  if (first_level < first_level_ || last_level > last_level_) {
    throw RangeError("restriction [" + std::to_string(first_level) + "," +
                     std::to_string(last_level) + "] is not inside the window");
  }
  return ZQuiverWindow(generator_, first_level, last_level, component_);
}

ZQuiverWindow build_window(const Quiver& delta, int a, int b, int component) {
  return ZQuiverWindow(delta, a, b, component);
}

// ---------------------------------------------------------------------------

SliceMap::SliceMap(std::vector<ZVertex> image) : image_(std::move(image)) {
  for (const ZVertex& v : image_) {
    if (v.component != component_shift()) {
      throw InputError("slice image spans several components");
    }
  }
}

SliceMap SliceMap::identity(std::size_t n) { return tau_power(n, 0); }

SliceMap SliceMap::tau_power(std::size_t n, int k) {
  std::vector<ZVertex> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = {-k, x, 0};
  return SliceMap(std::move(image));
}

SliceMap SliceMap::sigma_shift(std::size_t n, int k) {
  std::vector<ZVertex> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = {0, x, k};
  return SliceMap(std::move(image));
}

SliceMap SliceMap::from_permutation(const VertexPermutation& pi) {
  std::vector<ZVertex> image(pi.size());
  for (std::size_t x = 0; x < pi.size(); ++x) image[x] = {0, pi(x), 0};
  return SliceMap(std::move(image));
}

VertexPermutation SliceMap::base_permutation() const {
  VertexPermutation pi;
  for (const ZVertex& v : image_) pi.image.push_back(v.base);
  return pi;
}

ZVertex SliceMap::operator()(ZVertex v) const {
  const ZVertex& s = image_.at(v.base);
  return {v.level + s.level, s.base, v.component + s.component};
}

SliceMap SliceMap::compose(const SliceMap& inner) const {
  std::vector<ZVertex> image(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) image[x] = (*this)(inner.image_[x]);
  return SliceMap(std::move(image));
}

SliceMap SliceMap::inverse() const {
  std::vector<ZVertex> image(size());
  for (std::size_t x = 0; x < size(); ++x) {
    const ZVertex& s = image_[x];
    image.at(s.base) = {-s.level, x, -s.component};
  }
  return SliceMap(std::move(image));
}

SliceMap SliceMap::power(int k) const {
  SliceMap base = k < 0 ? inverse() : *this;
  SliceMap result = identity(size());
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) result = result.compose(base);
    base = base.compose(base);
  }
  return result;
}

bool SliceMap::is_identity() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (image_[x] != ZVertex{0, x, 0}) return false;
  }
  return true;
}

bool SliceMap::is_twist() const {
  return std::all_of(image_.begin(), image_.end(),
                     [](const ZVertex& v) { return v.level == 0 && v.component == 0; });
}

int SliceMap::degree_numerator() const {
  int sum = 0;
  for (const ZVertex& v : image_) sum -= v.level;
  return sum;
}

SliceMap SliceMap::normalized() const {
  if (image_.empty()) return *this;
  return tau_power(size(), normalization_shift()).compose(*this);
}

std::string format_slice_map(const Quiver& delta, const SliceMap& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) out << ", ";
    out << format_zvertex(delta, {0, x, 0}) << " -> " << format_zvertex(delta, f.image()[x]);
  }
  out << '}';
  return out.str();
}

bool preserves_z_multiplicity(const Quiver& delta, const SliceMap& f) {
  if (f.size() != delta.vertex_count() || !f.base_permutation().is_bijection()) return false;
  const auto& img = f.image();
  for (VertexIndex x = 0; x < f.size(); ++x) {
    for (VertexIndex y = 0; y < f.size(); ++y) {
      // Offsets where either side can be nonzero.
      const int shift = img[x].level - img[y].level;
      for (int delta_level : {0, 1, shift, shift + 1}) {
        const ZVertex u{0, x, 0};
        const ZVertex v{delta_level, y, 0};
        if (z_multiplicity(delta, u, v) != z_multiplicity(delta, f(u), f(v))) return false;
      }
    }
  }
  return true;
}

bool validate_on_window(const SliceMap& f, const ZQuiverWindow& window) {
  const Quiver& delta = window.generator();
  if (f.size() != delta.vertex_count() || !f.base_permutation().is_bijection()) return false;
  const auto& verts = window.vertices();
  std::vector<int> row(verts.size());
  for (const ZVertex& u : verts) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t a : window.out_arrows(u)) ++row[window.index_of(window.arrows()[a].target)];
    const ZVertex fu = f(u);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (z_multiplicity(delta, fu, f(verts[j])) != row[j]) return false;
    }
  }
  return true;
}

}  // namespace dpic
