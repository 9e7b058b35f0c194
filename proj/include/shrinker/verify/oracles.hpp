#pragma once

#include <span>
#include <vector>

// Reference computations that share no code with the solver paths they check.
namespace shrinker::oracle {

// Eigenvalues of the n x n symmetric Toeplitz tridiagonal matrix with constant
// diagonal d and off-diagonal e: d + 2e cos(j pi / (n+1)), ascending.
std::vector<double> toeplitz_eigenvalues(double d, double e, std::size_t n);

using DenseMatrix = std::vector<std::vector<double>>;

DenseMatrix dense_from_tridiagonal(std::span<const double> diagonal,
                                   std::span<const double> off_diagonal);

// Coefficients c_0..c_n of det(tI - A) = sum c_i t^i (c_n = 1), by the
// Faddeev-LeVerrier recursion.
std::vector<double> characteristic_polynomial(const DenseMatrix& a);

double evaluate_polynomial(std::span<const double> coeffs, double t);

// Real roots of a polynomial whose roots are all real, ascending.
// Durand-Kerner iteration followed by Newton polishing.
std::vector<double> real_roots(std::span<const double> coeffs);

// j-th (1-based) Dirichlet eigenvalue of -(u'' - x u') on (-half_width,
// half_width), by RK4 shooting from the origin with even/odd initial data.
double continuum_dirichlet_eigenvalue(double half_width, int index);

}  // namespace shrinker::oracle
