// Acceptance runner: one line per criterion, nonzero exit on any failure.
//
//   hylz_acceptance                 run everything
//   hylz_acceptance --criterion ID  run one criterion (or group)
//   hylz_acceptance --list

#include <cstring>
#include <iostream>
#include <string>

#include "hylz/acceptance.hpp"

int main(int argc, char** argv) {
  std::string only;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--list") == 0) {
      for (const auto& c : hylz::acceptance_criteria()) std::cout << c.id << ' ' << c.group << ' ' << c.title << '\n';
      return 0;
    }
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
      only = argv[++a];
    } else {
      std::cerr << "usage: hylz_acceptance [--criterion ID | --list]\n";
      return 2;
    }
  }
  const auto reports = hylz::run_acceptance(hylz::ReferenceData::embedded(), only);
  if (reports.empty()) {
    std::cerr << "no criterion matches '" << only << "'\n";
    return 2;
  }
  for (const auto& r : reports) std::cout << hylz::format_report(r) << '\n';
  return hylz::acceptance_passed(reports) ? 0 : 1;
}
