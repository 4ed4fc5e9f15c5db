// Runs every acceptance criterion at full scale and prints one line per
// criterion. Exit status 0 iff all pass. Pass --quick for the reduced grid.

#include <cstring>
#include <iostream>

#include "merchant/acceptance.hpp"

int main(int argc, char** argv) {
  merchant::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  const auto report = merchant::acceptance::run_all(options);
  int failed = 0;
  for (const auto& check : report.checks) {
    std::cout << merchant::acceptance::format_line(check) << "\n";
    if (!check.passed) ++failed;
  }
  std::cout << report.checks.size() - failed << "/" << report.checks.size()
            << " acceptance criteria passed\n";
  return report.overall() ? 0 : 1;
}
