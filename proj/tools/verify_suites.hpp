#ifndef DPIC_TOOLS_VERIFY_SUITES_HPP
#define DPIC_TOOLS_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dpic::cli {

struct Check {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteOptions {
  int max_rank = 8;
  std::uint64_t seed = 0x5eed;
};

// Known suites: table1, table2, kzero, coxeter, roots, weyl, all.
bool is_suite(const std::string& name);
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace dpic::cli

#endif  // DPIC_TOOLS_VERIFY_SUITES_HPP
