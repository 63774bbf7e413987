#include "dpic/catalog.hpp"

#include <charconv>
#include <string>

namespace dpic {

namespace {

Quiver with_vertices(std::string name, int count) {
  Quiver q(std::move(name));
  for (int i = 1; i <= count; ++i) q.add_vertex(std::to_string(i));
  return q;
}

void arrow(Quiver& q, int from, int to) {
  q.add_arrow("a" + std::to_string(q.arrow_count() + 1), std::to_string(from), std::to_string(to));
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

Quiver dynkin_a(int n) {
  if (n < 1) throw InputError("A_n requires n >= 1");
  Quiver q = with_vertices("A" + std::to_string(n), n);
  for (int i = 1; i < n; ++i) arrow(q, i, i + 1);
  return q;
}

Quiver dynkin_d(int n) {
  if (n < 4) throw InputError("D_n requires n >= 4");
  Quiver q = with_vertices("D" + std::to_string(n), n);
  arrow(q, 1, 2);
  arrow(q, 1, 3);
  arrow(q, 1, 4);
  for (int i = 4; i < n; ++i) arrow(q, i, i + 1);
  return q;
}

Quiver dynkin_e(int n) {
  if (n < 6 || n > 8) throw InputError("E_n requires 6 <= n <= 8");
  Quiver q = with_vertices("E" + std::to_string(n), n);
  arrow(q, 1, 2);
  arrow(q, 2, 3);
  arrow(q, 4, 3);
  arrow(q, 5, 3);
  for (int i = 6; i <= n; ++i) arrow(q, i, i - 1);
  return q;
}

Quiver affine_d(int n) {
  if (n < 4) throw InputError("D~_n requires n >= 4");
  Quiver q = with_vertices("Dt" + std::to_string(n), n + 1);
  if (n == 4) {
    for (int i = 2; i <= 5; ++i) arrow(q, 1, i);
    return q;
  }
  arrow(q, 3, 1);
  arrow(q, 3, 2);
  for (int j = 3; j <= n - 2; ++j) {
    if (j % 2 == 0) {
      arrow(q, j, j + 1);
    } else {
      arrow(q, j + 1, j);
    }
  }
  arrow(q, n - 1, n);
  arrow(q, n - 1, n + 1);
  return q;
}

Quiver affine_e(int n) {
  if (n < 6 || n > 8) throw InputError("E~_n requires 6 <= n <= 8");
  Quiver q = with_vertices("Et" + std::to_string(n), n + 1);
  switch (n) {
    case 6:
      arrow(q, 2, 1);
      arrow(q, 3, 2);
      arrow(q, 3, 4);
      arrow(q, 4, 5);
      arrow(q, 3, 6);
      arrow(q, 6, 7);
      break;
    case 7:
      arrow(q, 2, 1);
      arrow(q, 3, 2);
      arrow(q, 4, 3);
      arrow(q, 4, 5);
      arrow(q, 5, 6);
      arrow(q, 6, 7);
      arrow(q, 4, 8);
      break;
    default:
      for (int i = 1; i < 8; ++i) arrow(q, i, i + 1);
      arrow(q, 3, 9);
      break;
  }
  return q;
}

Quiver omega(int n) {
  if (n < 2) throw InputError("Omega_n requires n >= 2");
  Quiver q = with_vertices("Omega" + std::to_string(n), 2);
  for (int i = 1; i <= n; ++i) q.add_arrow("alpha" + std::to_string(i), "1", "2");
  return q;
}

Quiver cycle_t(int p, int q_len) {
  if (q_len < 1 || p < q_len) throw InputError("T_{p,q} requires p >= q >= 1");
  Quiver q = with_vertices("T" + std::to_string(p) + "_" + std::to_string(q_len), p + q_len);
  for (int i = 1; i <= p; ++i) {
    q.add_arrow("alpha" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  }
  // beta_q : 1 -> p+q, beta_j : p+j+1 -> p+j, ending in p+1.
  if (q_len == 1) {
    q.add_arrow("beta1", "1", std::to_string(p + 1));
    return q;
  }
  q.add_arrow("beta" + std::to_string(q_len), "1", std::to_string(p + q_len));
  for (int j = q_len - 1; j >= 1; --j) {
    q.add_arrow("beta" + std::to_string(j), std::to_string(p + j + 1), std::to_string(p + j));
  }
  return q;
}

Quiver catalog_quiver(std::string_view name) {
  if (!name.empty() && name.front() == '@') name.remove_prefix(1);
  const std::string full(name);
  auto fail = [&]() -> Quiver { throw InputError("unknown catalog quiver '" + full + "'"); };

  if (name.starts_with("Omega")) {
    if (auto n = parse_int(name.substr(5))) return omega(*n);
    return fail();
  }
  if (name.starts_with("Dt") || name.starts_with("Et")) {
    const auto n = parse_int(name.substr(2));
    if (!n) return fail();
    return name[0] == 'D' ? affine_d(*n) : affine_e(*n);
  }
  if (name.starts_with("T")) {
    const auto sep = name.find('_');
    if (sep == std::string_view::npos) return fail();
    const auto p = parse_int(name.substr(1, sep - 1));
    const auto q = parse_int(name.substr(sep + 1));
    if (!p || !q) return fail();
    return cycle_t(*p, *q);
  }
  if (name.size() >= 2) {
    const auto n = parse_int(name.substr(1));
    if (!n) return fail();
    switch (name[0]) {
      case 'A': return dynkin_a(*n);
      case 'D': return dynkin_d(*n);
      case 'E': return dynkin_e(*n);
      default: break;
    }
  }
  return fail();
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) names.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) names.push_back("E" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) names.push_back("Dt" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) names.push_back("Et" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) names.push_back("Omega" + std::to_string(n));
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= p; ++q) names.push_back("T" + std::to_string(p) + "_" + std::to_string(q));
  }
  return names;
}

}  // namespace dpic
