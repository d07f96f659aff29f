#include "spherecalc/suite.hpp"

#include <cstdio>

int main() {
  const auto criteria = sc::acceptance_criteria();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::printf("%s criterion %zu: %s", c.ok ? "PASS" : "FAIL", i + 1, c.name.c_str());
    if (!c.detail.empty()) std::printf(" (%s)", c.detail.c_str());
    std::printf("\n");
    failed += c.ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
