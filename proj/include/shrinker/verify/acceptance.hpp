#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace shrinker::verify {

struct CheckResult {
  std::string id;    // "1".."9", or a label for supplementary/exploratory groups
  std::string name;
  bool passed = true;
  bool exploratory = false;  // reported, never affects overall status
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_relative_gap = 0.0;
  std::string detail;
  double seconds = 0.0;
};

// Registry order is the output order.
struct Check {
  std::string id;
  std::string name;
  bool exploratory;
  std::function<CheckResult()> run;
};

const std::vector<Check>& registry();

CheckResult run_check(const Check& check);

struct VerificationReport {
  std::string timestamp;
  std::string artifact_version;
  std::vector<CheckResult> sections;

  bool overall_pass() const;
};

// Runs every registered check. `progress` is called after each one.
VerificationReport run_all(const std::function<void(const CheckResult&)>& progress = {});

nlohmann::json report_to_json(const VerificationReport& report);

// One line per check: "[PASS] 2 Sphere sharpness (...): ...".
std::string format_line(const CheckResult& result);

// Reference entries of the published coefficient table, k = 1..41.
struct PublishedRow {
  int k;
  double a1;
  double a2_next;
  double a3_next;
};
const std::vector<PublishedRow>& published_table1();

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace shrinker::verify
