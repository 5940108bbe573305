// Runs the acceptance battery and prints one line per criterion.

#include <iostream>

#include "cornerpoly/suite.hpp"

int main() {
  bool all = true;
  cornerpoly::run_acceptance({}, [&](const cornerpoly::CriterionResult& r) {
    std::cout << cornerpoly::format_result(r) << std::endl;
    all = all && r.passed();
  });
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
