#include "shrinker/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "shrinker/error.hpp"
#include "shrinker/model_spectra.hpp"
#include "shrinker/parallel.hpp"

namespace shrinker {

void DirichletProblem::validate() const {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::invalid_dimension, "dim must be 1 or 2");
  if (bounds.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::invalid_dimension, "need one interval per axis");
  }
  for (const auto& iv : bounds) {
    if (!(iv.a < iv.b)) throw Error(ErrorCode::invalid_grid, "interval needs a < b");
  }
  if (grid_points < 3) throw Error(ErrorCode::invalid_grid, "need at least 3 interior points");
  const std::size_t capacity = dim == 1 ? grid_points : grid_points * grid_points;
  if (eigen_count < 1 || eigen_count > capacity) {
    throw Error(ErrorCode::invalid_grid, "eigen_count must be in [1, " + std::to_string(capacity) + "]");
  }
}

double ou_potential(double x) noexcept { return 0.25 * x * x - 0.5; }

DiscreteOperator assemble_1d(const DirichletProblem& problem) {
  if (problem.dim != 1) throw Error(ErrorCode::invalid_dimension, "assemble_1d needs dim = 1");
  if (problem.grid_points < 3) throw Error(ErrorCode::invalid_grid, "need at least 3 interior points");
  if (problem.bounds.size() != 1 || !(problem.bounds[0].a < problem.bounds[0].b)) {
    throw Error(ErrorCode::invalid_grid, "need one interval with a < b");
  }
  const auto [a, b] = problem.bounds[0];
  const std::size_t n = problem.grid_points;

  DiscreteOperator op;
  op.h = (b - a) / static_cast<double>(n + 1);
  const double inv_h2 = 1.0 / (op.h * op.h);
  op.grid.resize(n);
  op.diagonal.resize(n);
  op.transform_weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a + static_cast<double>(i + 1) * op.h;
    op.grid[i] = x;
    op.diagonal[i] = 2.0 * inv_h2 + ou_potential(x);
    op.transform_weights[i] = std::exp(0.25 * x * x);
  }
  op.off_diagonal.assign(n - 1, -inv_h2);
  return op;
}

DiscreteOperator make_tridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal) {
  if (diagonal.empty() || off_diagonal.size() + 1 != diagonal.size()) {
    throw Error(ErrorCode::invalid_grid, "off-diagonal must have one entry fewer than the diagonal");
  }
  DiscreteOperator op;
  op.diagonal = std::move(diagonal);
  op.off_diagonal = std::move(off_diagonal);
  return op;
}

std::size_t sturm_count(std::span<const double> diagonal, std::span<const double> off_diagonal,
                        double t) {
  double max_e2 = 1.0;
  for (const double e : off_diagonal) max_e2 = std::max(max_e2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;

  std::size_t count = 0;
  double q = diagonal[0] - t;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diagonal.size(); ++i) {
    const double e = off_diagonal[i - 1];
    q = diagonal[i] - t - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

double bisect_eigenvalue(std::span<const double> d, std::span<const double> e, std::size_t index,
                         double lo, double hi) {
  // Invariant: count(lo) <= index < count(hi).
  while (hi - lo > kEigenTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(d, e, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> tridiag_eigen(const DiscreteOperator& op, std::size_t count, std::size_t threads) {
  const std::size_t n = op.size();
  if (n == 0 || op.off_diagonal.size() + 1 != n) {
    throw Error(ErrorCode::invalid_grid, "malformed tridiagonal operator");
  }
  if (count > n) throw Error(ErrorCode::invalid_grid, "count exceeds matrix size");

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - radius);
    hi = std::max(hi, op.diagonal[i] + radius);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) +
                     kEigenTolerance;
  lo -= pad;
  hi += pad;

  std::vector<double> values(count);
  parallel_for(count, threads, [&](std::size_t j) {
    values[j] = bisect_eigenvalue(op.diagonal, op.off_diagonal, j, lo, hi);
  });
  return values;
}

EigenvalueSequence solve_1d(const DirichletProblem& problem) {
  problem.validate();
  if (problem.dim != 1) throw Error(ErrorCode::invalid_dimension, "solve_1d needs dim = 1");
  const auto op = assemble_1d(problem);
  const auto values = tridiag_eigen(op, problem.eigen_count);
  std::vector<Level> levels;
  levels.reserve(values.size());
  for (const double v : values) levels.push_back({v, 1});
  return {ProblemKind::Dirichlet, 1, std::move(levels), Provenance::Numerical};
}

EigenvalueSequence solve_rectangle(const DirichletProblem& problem) {
  problem.validate();
  if (problem.dim != 2) throw Error(ErrorCode::invalid_dimension, "solve_rectangle needs dim = 2");
  // The j-th 2-D eigenvalue uses per-axis indices at most j.
  const std::size_t per_axis = std::min(problem.eigen_count, problem.grid_points);
  auto axis = [&](std::size_t i) {
    DirichletProblem p;
    p.dim = 1;
    p.bounds = {problem.bounds[i]};
    p.grid_points = problem.grid_points;
    p.eigen_count = per_axis;
    return solve_1d(p);
  };
  const auto full = minkowski_sum(axis(0), axis(1));

  std::vector<Level> levels;
  std::uint64_t total = 0;
  for (const auto& level : full.levels()) {
    if (total >= problem.eigen_count) break;
    levels.push_back(level);
    total += level.mult;
  }
  if (total < problem.eigen_count) {
    throw Error(ErrorCode::insufficient_input_levels, "axis spectra too short for eigen_count");
  }
  return {ProblemKind::Dirichlet, 2, std::move(levels), Provenance::Numerical};
}

EigenvalueSequence solve(const DirichletProblem& problem) {
  return problem.dim == 1 ? solve_1d(problem) : solve_rectangle(problem);
}

double domain_inf_x2(std::span<const Interval> bounds) {
  double total = 0.0;
  for (const auto& iv : bounds) {
    double nearest = 0.0;
    if (iv.a > 0.0) {
      nearest = iv.a;
    } else if (iv.b < 0.0) {
      nearest = iv.b;
    }
    total += nearest * nearest;
  }
  return total;
}

std::vector<double> apply(const DiscreteOperator& op, std::span<const double> v) {
  const std::size_t n = op.size();
  if (v.size() != n) throw Error(ErrorCode::invalid_grid, "vector length does not match operator");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = op.diagonal[i] * v[i];
    if (i > 0) s += op.off_diagonal[i - 1] * v[i - 1];
    if (i + 1 < n) s += op.off_diagonal[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

namespace {

// LU factorization of a tridiagonal matrix with partial pivoting (second
// superdiagonal fill-in), followed by a solve in place.
class TridiagonalLu {
 public:
  TridiagonalLu(const DiscreteOperator& op, double shift)
      : dl_(op.off_diagonal), d_(op.diagonal), du_(op.off_diagonal) {
    const std::size_t n = d_.size();
    for (auto& x : d_) x -= shift;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 1 ? n - 1 : 0, false);

    double scale = 0.0;
    for (const double x : op.diagonal) scale = std::max(scale, std::abs(x));
    tiny_ = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny_;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    if (d_[n - 1] == 0.0) d_[n - 1] = tiny_;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    for (std::size_t r = n; r-- > 0;) {
      double s = b[r];
      if (r + 1 < n) s -= du_[r] * b[r + 1];
      if (r + 2 < n) s -= du2_[r] * b[r + 2];
      b[r] = s / d_[r];
    }
  }

 private:
  std::vector<double> dl_;
  std::vector<double> d_;
  std::vector<double> du_;
  std::vector<double> du2_;
  std::vector<bool> swapped_;
  double tiny_ = 0.0;
};

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> eigenvector(const DiscreteOperator& op, double eigenvalue) {
  const std::size_t n = op.size();
  const TridiagonalLu lu(op, eigenvalue);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  for (int iter = 0; iter < 2; ++iter) {
    lu.solve(v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv)) {
      throw Error(ErrorCode::zero_vector, "inverse iteration broke down");
    }
    for (auto& x : v) x /= nv;
  }
  return v;
}

double rayleigh_quotient(std::span<const double> v, const DiscreteOperator& op) {
  double vv = 0.0;
  for (const double x : v) vv += x * x;
  if (!(vv > 0.0)) throw Error(ErrorCode::zero_vector, "Rayleigh quotient of a zero vector");
  const auto av = apply(op, v);
  double vav = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) vav += v[i] * av[i];
  return vav / vv;
}

IdentityResidualReport identity_residual_checks(const DirichletProblem& problem) {
  if (problem.dim != 1 || problem.bounds.size() != 1) {
    throw Error(ErrorCode::invalid_dimension, "identity checks need a 1-D problem");
  }
  if (problem.grid_points < 3) throw Error(ErrorCode::invalid_grid, "need at least 3 interior points");
  const long double a = problem.bounds[0].a;
  const long double b = problem.bounds[0].b;
  const std::size_t n = problem.grid_points;
  const long double h = (b - a) / static_cast<long double>(n + 1);

  // Extended precision keeps sample rounding (|x|^2 ~ 16) well below the
  // 1/h^2 amplification of the second difference.
  auto stencil = [&](auto&& f, std::size_t i) {
    const long double x = a + static_cast<long double>(i) * h;
    const long double xm = a + static_cast<long double>(i - 1) * h;
    const long double xp = a + static_cast<long double>(i + 1) * h;
    const long double fm = f(xm);
    const long double f0 = f(x);
    const long double fp = f(xp);
    return ((fp - f0) - (f0 - fm)) / (h * h) - x * (fp - fm) / (2.0L * h);
  };

  IdentityResidualReport report;
  report.h = static_cast<double>(h);
  long double linear = 0.0L;
  long double quadratic = 0.0L;
  long double constant = 0.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    const long double x = a + static_cast<long double>(i) * h;
    linear = std::max(linear, std::abs(stencil([](long double s) { return s; }, i) + x));
    quadratic = std::max(quadratic, std::abs(stencil([](long double s) { return s * s; }, i) -
                                             2.0L * (1.0L - x * x)));
    constant = std::max(constant, std::abs(stencil([](long double) { return 1.0L; }, i)));
  }
  report.linear = static_cast<double>(linear);
  report.quadratic = static_cast<double>(quadratic);
  report.constant = static_cast<double>(constant);
  return report;
}

std::vector<double> convergence_orders(const DirichletProblem& problem) {
  problem.validate();
  std::vector<std::vector<double>> runs;
  DirichletProblem p = problem;
  for (int level = 0; level < 3; ++level) {
    runs.push_back(solve(p).expanded(problem.eigen_count));
    p.grid_points = 2 * p.grid_points + 1;
  }
  const std::size_t m = std::min({runs[0].size(), runs[1].size(), runs[2].size()});
  std::vector<double> orders(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double coarse = runs[0][j] - runs[1][j];
    const double fine = runs[1][j] - runs[2][j];
    orders[j] = std::log2(coarse / fine);
  }
  return orders;
}

}  // namespace shrinker
