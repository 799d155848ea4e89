// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures (capped at 1).
#include <iostream>

#include "lieflag/acceptance.hpp"

int main() {
  int failed = lieflag::acceptance::run_all(std::cout);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
