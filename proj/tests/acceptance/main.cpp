// One PASS/FAIL line per criterion; exit status 0 only if every selected
// criterion passes.
#include "acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::vector<int> ids;
  app.add_option("--criterion", ids, "criterion ids (default: all)")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  const auto outcomes = belyi::acceptance::run_criteria(ids, &std::cout);
  int failed = 0;
  for (const auto& o : outcomes) failed += o.pass ? 0 : 1;
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
