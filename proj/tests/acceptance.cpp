// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Optional arguments restrict the run, e.g. `acceptance 1 7`.
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include "hck/parallel.hpp"
#include "hck/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int c = 1; c <= hck::kCriteria; ++c) which.push_back(c);

  bool all_pass = true;
  for (int c : which) {
    hck::SuiteResult r;
    try {
      r = hck::run_criterion(c, hck::default_jobs());
    } catch (const std::exception& e) {
      std::cout << "criterion " << c << ": FAIL (exception: " << e.what() << ")\n";
      all_pass = false;
      continue;
    }
    std::cout << "criterion " << c << ": " << hck::to_string(r.status) << "  " << r.name << "  [" << r.checks
              << " checks, " << r.failures << " failed, " << std::fixed << std::setprecision(2) << r.seconds << " s]\n";
    for (const auto& w : r.witnesses) std::cout << "    " << w << "\n";
    if (r.failures > r.witnesses.size()) std::cout << "    ... " << r.failures - r.witnesses.size() << " more\n";
    all_pass = all_pass && r.status == hck::CheckStatus::Pass;
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
