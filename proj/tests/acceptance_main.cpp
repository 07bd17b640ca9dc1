// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "prvkit/acceptance.hpp"

#include <iostream>

int main() {
  bool all = true;
  for (int id : prvkit::acceptance::all_ids()) {
    auto r = prvkit::acceptance::run({id}).front();
    std::cout << prvkit::acceptance::format_line(r, false, true) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
