#include <cstdio>
#include <iostream>

#include "shrinker/verify/acceptance.hpp"

int main() {
  const auto report = shrinker::verify::run_all([](const shrinker::verify::CheckResult& r) {
    std::cout << shrinker::verify::format_line(r) << std::endl;
  });
  std::cout << (report.overall_pass() ? "OVERALL PASS" : "OVERALL FAIL") << std::endl;
  return report.overall_pass() ? 0 : 1;
}
