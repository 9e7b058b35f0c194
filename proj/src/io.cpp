#include "shrinker/io.hpp"

#include <cstdio>
#include <sstream>

#include "shrinker/error.hpp"

namespace shrinker::io {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

ProblemKind kind_from_string(const std::string& s) {
  if (s == "closed") return ProblemKind::Closed;
  if (s == "dirichlet") return ProblemKind::Dirichlet;
  throw Error(ErrorCode::parse_error, "unknown kind '" + s + "'");
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "ClosedForm") return Provenance::ClosedForm;
  if (s == "Numerical") return Provenance::Numerical;
  return Provenance::External;
}

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string_view source_name(BoundSource s) {
  switch (s) {
    case BoundSource::Thm12: return "Thm12";
    case BoundSource::Thm52: return "Thm52";
    case BoundSource::Eq44: return "Eq44";
  }
  return "Thm12";
}

}  // namespace

json spectrum_to_json(const EigenvalueSequence& seq) {
  json entries = json::array();
  for (const auto& level : seq.levels()) {
    entries.push_back({{"lambda", level.lambda}, {"mult", level.mult}});
  }
  return {{"kind", std::string(to_string(seq.kind()))},
          {"n", seq.dimension()},
          {"entries", std::move(entries)},
          {"provenance", std::string(to_string(seq.provenance()))}};
}

EigenvalueSequence spectrum_from_json(const json& j) {
  try {
    std::vector<Level> levels;
    for (const auto& e : j.at("entries")) {
      levels.push_back({e.at("lambda").get<double>(), e.at("mult").get<std::uint64_t>()});
    }
    const auto provenance =
        j.contains("provenance") ? provenance_from_string(j["provenance"].get<std::string>())
                                 : Provenance::External;
    return {kind_from_string(j.at("kind").get<std::string>()), j.at("n").get<int>(),
            std::move(levels), provenance};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    throw Error(ErrorCode::parse_error, e.what());
  }
}

std::string spectrum_to_csv(const EigenvalueSequence& seq) {
  std::string out = "lambda,mult\n";
  for (const auto& level : seq.levels()) {
    out += format_double(level.lambda) + "," + std::to_string(level.mult) + "\n";
  }
  return out;
}

EigenvalueSequence spectrum_from_csv(const std::string& text, ProblemKind kind, int n) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("lambda,mult", 0) != 0) {
    throw Error(ErrorCode::parse_error, "CSV spectrum must start with header 'lambda,mult'");
  }
  std::vector<Level> levels;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::parse_error, "bad CSV row '" + line + "'");
    try {
      std::size_t used = 0;
      const double lambda = std::stod(line.substr(0, comma), &used);
      const auto mult = std::stoull(line.substr(comma + 1));
      levels.push_back({lambda, mult});
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "bad CSV row '" + line + "'");
    }
  }
  try {
    return {kind, n, std::move(levels), Provenance::External};
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

LoadedSpectrum parse_spectrum(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::parse_error, "empty spectrum file");
  if (text[first] != '{') {
    // Bare CSV carries no kind or dimension.
    throw Error(ErrorCode::parse_error,
                "CSV spectra need --kind and --n; use spectrum_from_csv");
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  LoadedSpectrum loaded{spectrum_from_json(j), std::nullopt};
  if (j.contains("min_x2")) loaded.min_x2_hint = j["min_x2"].get<double>();
  return loaded;
}

json yang_report_to_json(const YangReport& r) {
  return {{"k", r.k},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"gap", r.gap},
          {"relative_gap", r.relative_gap},
          {"satisfied", r.satisfied},
          {"shift", r.shift},
          {"kind", std::string(to_string(r.kind))}};
}

json bound_to_json(const ChengYangBound& b) {
  json j = {{"k", b.k},
            {"n", b.n},
            {"mu_1", b.mu_1},
            {"coefficient_a", b.coefficient_a},
            {"bound_value", b.bound_value},
            {"source", std::string(source_name(b.source))}};
  if (b.simplified_bound) j["simplified_bound"] = *b.simplified_bound;
  return j;
}

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
  std::string out = "k,a1,a2_next,a3_next\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + "," + format_double(r.a1) + "," + format_double(r.a2_next) + "," +
           format_double(r.a3_next) + "\n";
  }
  return out;
}

std::string table1_to_markdown(const std::vector<Table1Row>& rows) {
  // Blocks of ten columns (eleven in the last block), values rounded half-up.
  std::string out;
  std::size_t start = 0;
  while (start < rows.size()) {
    std::size_t end = std::min(rows.size(), start + 10);
    if (rows.size() - end == 1) end = rows.size();
    auto line = [&](const std::string& label, auto&& cell) {
      std::string s = "| " + label + " |";
      for (std::size_t i = start; i < end; ++i) s += " " + cell(rows[i]) + " |";
      return s + "\n";
    };
    out += line("k", [](const Table1Row& r) { return std::to_string(r.k); });
    out += "|---|";
    for (std::size_t i = start; i < end; ++i) out += "---:|";
    out += "\n";
    out += line("a1(k)", [](const Table1Row& r) { return fixed2(round_half_up_2(r.a1)); });
    out += line("a2(k+1)", [](const Table1Row& r) { return fixed2(round_half_up_2(r.a2_next)); });
    out += line("a3(k+1)", [](const Table1Row& r) { return fixed2(round_half_up_2(r.a3_next)); });
    start = end;
    if (start < rows.size()) out += "\n";
  }
  return out;
}

DirichletProblem problem_from_json(const json& j) {
  DirichletProblem p;
  try {
    p.dim = j.at("dim").get<int>();
    for (const auto& b : j.at("bounds")) {
      if (!b.is_array() || b.size() != 2) throw Error(ErrorCode::parse_error, "bounds entries are [a, b]");
      p.bounds.push_back({b[0].get<double>(), b[1].get<double>()});
    }
    p.grid_points = j.at("grid").get<std::size_t>();
    p.eigen_count = j.at("count").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  return p;
}

json problem_to_json(const DirichletProblem& p) {
  json bounds = json::array();
  for (const auto& iv : p.bounds) bounds.push_back({iv.a, iv.b});
  return {{"dim", p.dim}, {"bounds", bounds}, {"grid", p.grid_points}, {"count", p.eigen_count}};
}

}  // namespace shrinker::io
