#include "dpic/reference_tables.hpp"

namespace dpic {

std::optional<std::string> known_sigma_relation(const GraphType& type) {
  if (!type.is_dynkin()) return std::nullopt;
  const int n = type.n;
  const auto tau = [](int m) { return m == 1 ? std::string("tau") : "tau^" + std::to_string(m); };
  switch (type.series) {
    case 'A': return tau(n + 1) + " = sigma^-2";
    case 'D':
      if (n == 4) return std::string("tau^3 = sigma^-1");
      return tau(n - 1) + (n % 2 ? " = theta sigma^-1" : " = sigma^-1");
    case 'E':
      if (n == 6) return std::string("tau^6 = theta sigma^-1");
      if (n == 7) return std::string("tau^9 = sigma^-1");
      if (n == 8) return std::string("tau^15 = sigma^-1");
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::optional<std::size_t> known_torsion_order(const GraphType& type) {
  if (type.family != GraphFamily::AffineTree) return std::nullopt;
  if (type.series == 'D') {
    if (type.n == 4) return 24;
    return type.n % 2 == 0 ? 8 : 4;
  }
  switch (type.n) {
    case 6: return 6;
    case 7: return 2;
    case 8: return 1;
    default: return std::nullopt;
  }
}

bool known_half_translation(const GraphType& type) {
  return type.family == GraphFamily::AffineTree && type.series == 'D' && type.n % 2 == 1;
}

std::optional<std::uint64_t> known_weyl_order(const GraphType& type) {
  if (!type.is_dynkin()) return std::nullopt;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= type.n + (type.series == 'A' ? 1 : 0); ++i) factorial *= static_cast<std::uint64_t>(i);
  switch (type.series) {
    case 'A': return factorial;
    case 'D': return factorial << (type.n - 1);
    case 'E':
      if (type.n == 6) return 51840;
      if (type.n == 7) return 2903040;
      if (type.n == 8) return 696729600;
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::vector<std::string> finite_type_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
  return out;
}

std::vector<std::string> affine_type_names() {
  std::vector<std::string> out;
  for (int n = 4; n <= 8; ++n) out.push_back("Dt" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("Et" + std::to_string(n));
  return out;
}

}  // namespace dpic
