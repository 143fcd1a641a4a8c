// Prints one PASS/FAIL line per acceptance criterion. With an argument, runs
// only that criterion. Exit status is 0 iff every criterion run passed.
#include <cstdlib>
#include <iostream>
#include <string>

#include "thetawb/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace thetawb::acceptance;
  std::vector<CriterionResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(run_criterion(std::stoi(argv[i])));
  } else {
    results = run_all();
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_line(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
