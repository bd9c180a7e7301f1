// Acceptance criteria runner: `acceptance <id>` runs one criterion, no
// argument runs them all. One PASS/FAIL line per criterion.
#include "scatterlab/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace scatterlab;
  std::vector<int> ids;
  if (argc > 1) {
    ids.push_back(std::atoi(argv[1]));
  } else {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  bool all = true;
  for (int id : ids) {
    try {
      auto r = run_criterion(id);
      std::cout << format_line(r) << "\n";
      if (id == 10) std::cout << corrected_signature_line() << "\n";
      all = all && r.passed;
    } catch (const std::exception& e) {
      std::cout << "FAIL #" << id << " error: " << e.what() << "\n";
      all = false;
    }
  }
  return all ? 0 : 1;
}
