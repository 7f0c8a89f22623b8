// Acceptance gate: one pass/fail line per criterion.  Criteria 1-9 run the
// grouped verification checks in-process; criterion 10 times the CLI verify
// subcommand end to end.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "octant/octant.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-octant-binary>\n";
    return 2;
  }

  bool all = true;
  const std::vector<octant::Criterion> criteria =
      octant::run_criteria(octant::VerifyOptions{});
  for (const octant::Criterion& crit : criteria) {
    std::cout << "CRITERION " << crit.number << " "
              << (crit.pass ? "PASS" : "FAIL") << " - " << crit.description
              << "\n";
    for (const octant::CheckResult& c : crit.checks) {
      std::cout << "    " << (c.pass ? "ok  " : "BAD ") << c.name
                << "  worst = " << octant::format_gap(c.worst)
                << "  tol = " << octant::format_gap(c.tol) << "  (" << c.detail
                << ")\n";
    }
    all = all && crit.pass;
  }

  const std::string cmd = "\"" + std::string(argv[1]) + "\" verify >/dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool cli_pass = status == 0 && seconds < 60.0;
  std::cout << "CRITERION 10 " << (cli_pass ? "PASS" : "FAIL")
            << " - CLI verify subcommand exits 0 in under 60 s (took "
            << seconds << " s, status " << status << ")\n";
  all = all && cli_pass;

  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return all ? 0 : 1;
}
