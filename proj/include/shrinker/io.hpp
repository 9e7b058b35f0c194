#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shrinker/chengyang.hpp"
#include "shrinker/dirichlet.hpp"
#include "shrinker/inequalities.hpp"
#include "shrinker/spectrum.hpp"

namespace shrinker::io {

// {"kind": "closed"|"dirichlet", "n": int, "entries": [{"lambda", "mult"}],
//  "provenance": string}
nlohmann::json spectrum_to_json(const EigenvalueSequence& seq);
EigenvalueSequence spectrum_from_json(const nlohmann::json& j);

// Header `lambda,mult`, one row per level.
std::string spectrum_to_csv(const EigenvalueSequence& seq);
EigenvalueSequence spectrum_from_csv(const std::string& text, ProblemKind kind, int n);

// Parses either format, sniffing JSON by its first non-blank character.
// Throws Error{parse_error}.
struct LoadedSpectrum {
  EigenvalueSequence spectrum;
  std::optional<double> min_x2_hint;
};
LoadedSpectrum parse_spectrum(const std::string& text);

nlohmann::json yang_report_to_json(const YangReport& report);
nlohmann::json bound_to_json(const ChengYangBound& bound);

std::string table1_to_csv(const std::vector<Table1Row>& rows);
std::string table1_to_markdown(const std::vector<Table1Row>& rows);

// {"dim": 1|2, "bounds": [[a,b],...], "grid": N, "count": m}
DirichletProblem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const DirichletProblem& problem);

// Fixed "%.17g" formatting so files are byte-stable.
std::string format_double(double x);

}  // namespace shrinker::io
