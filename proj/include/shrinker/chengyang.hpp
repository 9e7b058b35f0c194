#pragma once

#include <optional>
#include <span>
#include <vector>

namespace shrinker {

struct SequenceStats {
  std::size_t k = 0;
  double lambda_mean = 0.0;   // (1/k) sum mu_i
  double square_mean = 0.0;   // (1/k) sum mu_i^2
  double f = 0.0;             // (1 + 2/n) Lambda_k^2 - T_k
  int n = 0;
};

// Statistics of mu_1..mu_k. Requires positive, nondecreasing entries.
SequenceStats sequence_stats(std::span<const double> mu, int n);

// C(n,k) = 1 - (1/3n) (k/(k+1))^(4/n) (1+2/n)(1+4/n) / (k+1)^3.
double recursion_coefficient(int n, std::size_t k);

struct RecursionStep {
  std::size_t k = 0;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  double f_next = 0.0;       // F_{k+1}
  double f_next_bound = 0.0; // C(n,k) ((k+1)/k)^(4/n) F_k
};

struct RecursionReport {
  std::vector<RecursionStep> steps;
  // True when every k whose hypotheses hold for all j <= k also satisfies the
  // conclusion.
  bool implication_holds = true;
};

RecursionReport recursion_check(std::span<const double> mu, int n);

double a1(int n);
double a2(int k, int n);
double a2max(int k);
double a3(int k);

// Largest argument accepted by a_coeff.
inline constexpr int kMaxCoefficientArgument = 398;

double a_coeff(int m);

struct Table1Row {
  int k = 0;
  double a1 = 0.0;
  double a2_next = 0.0;
  double a3_next = 0.0;
};

std::vector<Table1Row> table1();

// Rounds to two decimals, halves away from zero toward +infinity.
double round_half_up_2(double x);

enum class BoundSource { Thm12, Thm52, Eq44 };

struct ChengYangBound {
  std::size_t k = 0;
  int n = 0;
  double mu_1 = 0.0;
  double coefficient_a = 0.0;
  double bound_value = 0.0;
  BoundSource source = BoundSource::Thm12;
  // Coefficient-free bound mu_1 k^(2/n), emitted for n >= 41 and k >= 41.
  std::optional<double> simplified_bound;
};

// Upper bound for lambda_k + shift on a compact shrinker.
ChengYangBound thm12_bound(int n, double min_x2, std::size_t k);

// Upper bound for lambda_{k+1} + shift on a Dirichlet domain.
ChengYangBound thm52_bound(int n, double inf_x2, double lambda_1, std::size_t k);

// mu_{k+1} <= (1 + 4/n) k^(2/n) mu_1.
double eq44_bound(int n, double mu_1, std::size_t k);

}  // namespace shrinker
