#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "shrinker/chengyang.hpp"
#include "shrinker/dirichlet.hpp"
#include "shrinker/error.hpp"
#include "shrinker/inequalities.hpp"
#include "shrinker/io.hpp"
#include "shrinker/model_spectra.hpp"
#include "shrinker/verify/acceptance.hpp"

namespace shrinker::cli {

namespace {

using nlohmann::json;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return kParse;
    case ErrorCode::insufficient_spectrum:
    case ErrorCode::insufficient_input_levels: return kInsufficientData;
    default: return kUsage;
  }
}

struct SpectrumArgs {
  std::string model;
  int n = 0;
  int k = 0;
  std::size_t count = 0;
  std::string format = "json";
  std::vector<double> bounds;
  std::size_t grid = 0;
  std::string out;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  std::optional<EigenvalueSequence> seq;
  double min_x2 = 0.0;
  if (a.model == "sphere") {
    seq = sphere_spectrum(a.n, a.count);
    min_x2 = a.n;
  } else if (a.model == "euclidean-ou") {
    seq = ou_spectrum(a.n, a.count);
  } else if (a.model == "cylinder") {
    seq = cylinder_spectrum(a.k, a.n, a.count);
    min_x2 = a.k;
  } else if (a.model == "dirichlet-1d" || a.model == "dirichlet-rect") {
    const bool rect = a.model == "dirichlet-rect";
    if (a.bounds.size() != (rect ? 4u : 2u)) {
      throw UsageError(rect ? "dirichlet-rect needs --bounds a b c d" : "dirichlet-1d needs --bounds a b");
    }
    DirichletProblem p;
    p.dim = rect ? 2 : 1;
    p.bounds.push_back({a.bounds[0], a.bounds[1]});
    if (rect) p.bounds.push_back({a.bounds[2], a.bounds[3]});
    p.grid_points = a.grid;
    p.eigen_count = a.count;
    seq = solve(p);
    min_x2 = domain_inf_x2(p.bounds);
  } else {
    throw UsageError("unknown model '" + a.model + "'");
  }

  if (a.format == "csv") {
    emit(io::spectrum_to_csv(*seq), a.out, out);
  } else {
    auto j = io::spectrum_to_json(*seq);
    j["min_x2"] = min_x2;
    emit(dump(j), a.out, out);
  }
  return kOk;
}

struct SpectrumInput {
  std::string file;
  std::string csv_kind;  // required for CSV input
  int csv_n = 0;
};

io::LoadedSpectrum load_spectrum(const SpectrumInput& in) {
  const auto text = read_file(in.file);
  if (!in.csv_kind.empty()) {
    const auto kind = in.csv_kind == "dirichlet" ? ProblemKind::Dirichlet : ProblemKind::Closed;
    return {io::spectrum_from_csv(text, kind, in.csv_n), std::nullopt};
  }
  return io::parse_spectrum(text);
}

double resolve_x2(const std::optional<double>& flag, const std::optional<double>& hint, const char* name) {
  if (flag) return *flag;
  if (hint) return *hint;
  throw UsageError(std::string("missing ") + name);
}

struct YangArgs {
  SpectrumInput input;
  int n = 0;
  std::optional<double> min_x2;
  std::size_t k_max = 0;
  std::string out;
};

int cmd_yang(const YangArgs& a, std::ostream& out) {
  const auto loaded = load_spectrum(a.input);
  const double x2 = resolve_x2(a.min_x2, loaded.min_x2_hint, "--min-x2/--inf-x2");
  const std::size_t needed = loaded.spectrum.kind() == ProblemKind::Closed ? a.k_max + 2 : a.k_max + 1;
  const auto values = loaded.spectrum.expanded(needed);
  json reports = json::array();
  bool all = true;
  for (std::size_t k = 0; k <= a.k_max; ++k) {
    const auto r = yang_check(values, loaded.spectrum.kind(), a.n, x2, k);
    all = all && r.satisfied;
    reports.push_back(io::yang_report_to_json(r));
  }
  emit(dump(reports), a.out, out);
  return all ? kOk : kAssertionFailure;
}

struct LowerOrderArgs {
  SpectrumInput input;
  int n = 0;
  std::optional<double> inf_x2;
  std::string out;
};

int cmd_lower_order(const LowerOrderArgs& a, std::ostream& out) {
  const auto loaded = load_spectrum(a.input);
  const double x2 = resolve_x2(a.inf_x2, loaded.min_x2_hint, "--inf-x2");
  const auto r = lower_order_check(loaded.spectrum, a.n, x2);
  emit(dump({{"lhs", r.lhs}, {"rhs", r.rhs}, {"satisfied", r.satisfied}}), a.out, out);
  return r.satisfied ? kOk : kAssertionFailure;
}

struct BoundArgs {
  std::string theorem;
  int n = 0;
  std::optional<double> min_x2;
  std::optional<double> lambda1;
  std::optional<double> mu1;
  std::size_t k_max = 0;
  std::string check;  // optional spectrum file to test the bounds against
  std::string out;
};

int cmd_bound(BoundArgs a, std::ostream& out) {
  if (a.theorem == "closed") a.theorem = "1.2";
  if (a.theorem == "dirichlet") a.theorem = "5.2";
  if (a.theorem == "shifted") a.theorem = "4.4";
  std::vector<ChengYangBound> bounds;
  for (std::size_t k = 1; k <= a.k_max; ++k) {
    if (a.theorem == "1.2") {
      if (!a.min_x2) throw UsageError("--theorem 1.2 needs --min-x2");
      bounds.push_back(thm12_bound(a.n, *a.min_x2, k));
    } else if (a.theorem == "5.2") {
      if (!a.min_x2 || !a.lambda1) throw UsageError("--theorem 5.2 needs --inf-x2 and --lambda1");
      bounds.push_back(thm52_bound(a.n, *a.min_x2, *a.lambda1, k));
    } else if (a.theorem == "4.4") {
      if (!a.mu1) throw UsageError("--theorem 4.4 needs --mu1");
      ChengYangBound b;
      b.k = k;
      b.n = a.n;
      b.mu_1 = *a.mu1;
      b.coefficient_a = 4.0;
      b.bound_value = eq44_bound(a.n, *a.mu1, k);
      b.source = BoundSource::Eq44;
      bounds.push_back(b);
    } else {
      throw UsageError("--theorem must be 1.2 (closed), 5.2 (dirichlet) or 4.4 (shifted)");
    }
  }
  json arr = json::array();
  for (const auto& b : bounds) arr.push_back(io::bound_to_json(b));
  emit(dump(arr), a.out, out);

  if (a.check.empty()) return kOk;
  // Bounded quantity: lambda_k + shift (1.2), lambda_{k+1} + shift (5.2),
  // mu_{k+1} = lambda_k + mu_1 on a closed spectrum (4.4).
  const auto loaded = load_spectrum({a.check, "", 0});
  const auto& seq = loaded.spectrum;
  const std::size_t origin = seq.kind() == ProblemKind::Closed ? 0 : 1;
  const auto values = seq.expanded(a.k_max + 2);
  for (const auto& b : bounds) {
    const std::size_t index = a.theorem == "1.2" ? b.k : b.k + 1;
    if (index < origin || index - origin >= values.size()) {
      throw Error(ErrorCode::insufficient_spectrum, "spectrum too short for --k-max");
    }
    const double lambda = values[index - origin];
    const double shifted = a.theorem == "4.4" ? values[b.k - origin] + b.mu_1
                                              : lambda + shift_constant(a.n, *a.min_x2);
    if (shifted > b.bound_value + 1e-12 * std::max(1.0, shifted)) return kAssertionFailure;
  }
  return kOk;
}

int cmd_dirichlet(const std::string& file, const std::string& out_path, std::ostream& out) {
  json spec;
  try {
    spec = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  const auto problem = io::problem_from_json(spec);
  const auto seq = solve(problem);
  auto j = io::spectrum_to_json(seq);
  j["min_x2"] = domain_inf_x2(problem.bounds);
  j["order_estimates"] = convergence_orders(problem);
  emit(dump(j), out_path, out);
  return kOk;
}

int cmd_verify_all(const std::string& out_path, std::ostream& out) {
  const auto report = verify::run_all([&out](const verify::CheckResult& r) {
    out << verify::format_line(r) << "\n" << std::flush;
  });
  out << (report.overall_pass() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  if (!out_path.empty()) emit(dump(verify::report_to_json(report)), out_path, out);
  return report.overall_pass() ? kOk : kAssertionFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of the drift Laplacian on model self-shrinkers and universal inequality checks",
               "shrinker-spectra"};
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Generate a model or Dirichlet spectrum");
  sp->add_option("model", spectrum.model, "sphere | euclidean-ou | cylinder | dirichlet-1d | dirichlet-rect")
      ->required();
  sp->add_option("--n", spectrum.n, "Dimension");
  sp->add_option("--k", spectrum.k, "Sphere factor dimension (cylinder)");
  sp->add_option("--count", spectrum.count, "Distinct levels (models) or eigenvalues (Dirichlet)")->required();
  sp->add_option("--format", spectrum.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sp->add_option("--bounds", spectrum.bounds, "Interval end points, per axis");
  sp->add_option("--grid", spectrum.grid, "Interior grid points per axis");
  sp->add_option("--out", spectrum.out, "Output file (default stdout)");

  YangArgs yang;
  auto* yg = app.add_subcommand("yang", "Check the quadratic universal inequality for k = 0..k-max");
  yg->add_option("file", yang.input.file, "Spectrum file")->required();
  yg->add_option("--n", yang.n, "Dimension")->required();
  auto* min_opt = yg->add_option("--min-x2", yang.min_x2, "min |X|^2 (closed spectra)");
  yg->add_option("--inf-x2", yang.min_x2, "inf |X|^2 over the domain (Dirichlet spectra)")->excludes(min_opt);
  yg->add_option("--k-max", yang.k_max, "Largest truncation index")->required();
  yg->add_option("--csv-kind", yang.input.csv_kind, "Read CSV input of this kind")
      ->check(CLI::IsMember({"closed", "dirichlet"}));
  yg->add_option("--out", yang.out, "Output file");

  LowerOrderArgs lower;
  auto* lo = app.add_subcommand("lower-order", "Check the lower-order Dirichlet inequality");
  lo->add_option("file", lower.input.file, "Dirichlet spectrum file")->required();
  lo->add_option("--n", lower.n, "Dimension")->required();
  lo->add_option("--inf-x2", lower.inf_x2, "inf |X|^2 over the domain");
  lo->add_option("--csv-kind", lower.input.csv_kind, "Read CSV input of this kind")
      ->check(CLI::IsMember({"closed", "dirichlet"}));
  lo->add_option("--out", lower.out, "Output file");

  BoundArgs bound;
  auto* bd = app.add_subcommand("bound", "Eigenvalue growth bounds for k = 1..k-max");
  bd->add_option("--theorem", bound.theorem, "1.2 | 5.2 | 4.4, or closed | dirichlet | shifted")->required();
  bd->add_option("--n", bound.n, "Dimension")->required();
  auto* bmin = bd->add_option("--min-x2", bound.min_x2, "min |X|^2");
  bd->add_option("--inf-x2", bound.min_x2, "inf |X|^2 over the domain")->excludes(bmin);
  bd->add_option("--lambda1", bound.lambda1, "First Dirichlet eigenvalue");
  bd->add_option("--mu1", bound.mu1, "First shifted eigenvalue (4.4)");
  bd->add_option("--k-max", bound.k_max, "Largest k")->required();
  bd->add_option("--check", bound.check, "Spectrum file to test the bounds against");
  bd->add_option("--out", bound.out, "Output file");

  std::string table_format = "csv";
  std::string table_out;
  auto* tb = app.add_subcommand("table1", "Coefficient table a1(k), a2(k+1), a3(k+1), k = 1..41");
  tb->add_option("--format", table_format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
  tb->add_option("--out", table_out, "Output file");

  std::string problem_file;
  std::string dirichlet_out;
  auto* dr = app.add_subcommand("dirichlet", "Solve a Dirichlet problem given as JSON");
  dr->add_option("problem", problem_file, "Problem spec JSON")->required();
  dr->add_option("--out", dirichlet_out, "Output file");

  std::string report_out;
  auto* va = app.add_subcommand("verify-all", "Run every acceptance check");
  va->add_option("--out", report_out, "Write the JSON verification report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*sp) {
      if (spectrum.format == "json" && spectrum.count == 0) throw UsageError("--count must be >= 1");
      return cmd_spectrum(spectrum, out);
    }
    if (*yg) {
      yang.input.csv_n = yang.n;
      return cmd_yang(yang, out);
    }
    if (*lo) {
      lower.input.csv_n = lower.n;
      return cmd_lower_order(lower, out);
    }
    if (*bd) return cmd_bound(bound, out);
    if (*tb) {
      const auto rows = table1();
      emit(table_format == "md" ? io::table1_to_markdown(rows) : io::table1_to_csv(rows), table_out, out);
      return kOk;
    }
    if (*dr) return cmd_dirichlet(problem_file, dirichlet_out, out);
    if (*va) return cmd_verify_all(report_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace shrinker::cli
