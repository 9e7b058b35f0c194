#pragma once

#include <span>
#include <vector>

#include "shrinker/spectrum.hpp"

namespace shrinker {

// Absolute bracket width for Sturm bisection.
inline constexpr double kEigenTolerance = 1e-10;

struct Interval {
  double a = 0.0;
  double b = 0.0;
};

struct DirichletProblem {
  int dim = 1;
  std::vector<Interval> bounds;  // one per axis
  std::size_t grid_points = 0;   // interior points per axis
  std::size_t eigen_count = 1;

  // Throws Error{invalid_grid} or Error{invalid_dimension}.
  void validate() const;
};

// Symmetric tridiagonal discretization of -d^2/dx^2 + x^2/4 - 1/2, which is
// -L conjugated by e^{-x^2/4}.
struct DiscreteOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  std::vector<double> grid;
  std::vector<double> transform_weights;  // e^{x^2/4}: u = weight * v
  double h = 0.0;

  std::size_t size() const noexcept { return diagonal.size(); }
};

double ou_potential(double x) noexcept;

DiscreteOperator assemble_1d(const DirichletProblem& problem);

// Tridiagonal operator from raw coefficients (no grid information).
DiscreteOperator make_tridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal);

// Number of eigenvalues strictly below t (sign changes of the Sturm sequence).
std::size_t sturm_count(std::span<const double> diagonal, std::span<const double> off_diagonal,
                        double t);

// The `count` smallest eigenvalues in ascending order. Work is spread over
// `threads` workers (0 = worker_count()); the result does not depend on it.
std::vector<double> tridiag_eigen(const DiscreteOperator& op, std::size_t count,
                                  std::size_t threads = 0);

EigenvalueSequence solve_1d(const DirichletProblem& problem);
EigenvalueSequence solve_rectangle(const DirichletProblem& problem);
EigenvalueSequence solve(const DirichletProblem& problem);

// Squared distance from the origin to the box described by `bounds`.
double domain_inf_x2(std::span<const Interval> bounds);

std::vector<double> apply(const DiscreteOperator& op, std::span<const double> v);

// Eigenvector for a converged eigenvalue by two steps of shifted inverse
// iteration; unit Euclidean norm.
std::vector<double> eigenvector(const DiscreteOperator& op, double eigenvalue);

double rayleigh_quotient(std::span<const double> v, const DiscreteOperator& op);

struct IdentityResidualReport {
  double h = 0.0;
  double linear = 0.0;     // max |L_h x + x|
  double quadratic = 0.0;  // max |L_h x^2 - 2(1 - x^2)|
  double constant = 0.0;   // max |L_h 1|
};

// Residuals of L x = -x and L x^2 = 2(1 - x^2) for the central-difference
// stencil u'' - x u' on the problem's interior grid.
IdentityResidualReport identity_residual_checks(const DirichletProblem& problem);

// Observed convergence order per eigenvalue from grids N, 2N+1, 4N+3 (the
// spacing halves exactly each time).
std::vector<double> convergence_orders(const DirichletProblem& problem);

}  // namespace shrinker
