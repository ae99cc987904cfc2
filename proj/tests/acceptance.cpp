// Runs the eleven acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "vir/suite.hpp"

int main(int argc, char** argv) {
  vir::SuiteConfig cfg;
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (const auto& c : vir::run_suite(cfg)) {
    all = all && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  [" << c.detail
              << "]  " << std::fixed << std::setprecision(2) << c.seconds << " s" << std::endl;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
