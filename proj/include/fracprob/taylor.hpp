#pragma once

#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"

namespace fracprob {

struct TaylorReport {
  double lhs = 0.0;               // E[g(X)]
  std::vector<double> terms;      // j = 0..n
  std::vector<double> coefficients;  // c_j (RL) or (D*^{iα}g)(0) (Caputo)
  double remainder = 0.0;
  double remainder_abs = 0.0;     // same integral with |D^{(n+1)α}g|
  double residual = 0.0;          // lhs − Σ terms − remainder
};

// c_j = Γ(α)·[coefficient of x^{α−1} in D^{jα}g]. Throws DivergenceError when
// D^{jα}g keeps an exponent below α−1.
double rl_taylor_coefficient(const PowerSum& g, int j, double alpha);

// D^{jα}g has no exponent below α−1 for every j ≤ n.
bool rl_taylor_admissible(const PowerSum& g, double alpha, int n);
// Every Caputo step up to n+1 is applied to nonnegative exponents only.
bool caputo_taylor_admissible(const PowerSum& g, double alpha, int n);

// E[g(X)] = Σ_{j≤n} c_j/Γ((j+1)α) E[X^{(j+1)α−1}]
//         + E[X^{(n+1)α}]/Γ((n+1)α+1) · E[D^{(n+1)α}g(X_α^{(n+1)})]
TaylorReport rl_taylor_expectation(const PowerSum& g, const DistributionModel& x, double alpha,
                                   int n, const QuadratureConfig& cfg = {});

// Caputo form: Σ_{i≤n} (D*^{iα}g)(0)/Γ(iα+1) E[X^{iα}] plus the remainder with
// the (n+1)-fold Caputo derivative. g must have nonnegative exponents.
TaylorReport caputo_taylor_expectation(const PowerSum& g, const DistributionModel& x,
                                       double alpha, int n, const QuadratureConfig& cfg = {});

struct MomentIdentity {
  double lhs = 0.0;             // E[X^β]
  double rhs = 0.0;             // via eq_moment
  double rhs_quadrature = 0.0;  // E[(X^{(n+1)})^{β−(n+1)α}] by quadrature on the density
};

// E[X^β] = E[X^m]/Γ(m+1) · Γ(1+β)/Γ(1−m+β) · E[(X_α^{(n+1)})^{β−m}], m = (n+1)α.
// Needs β ≥ α and n ≤ (β−α)/α.
MomentIdentity fractional_moment_identity(double beta, const DistributionModel& x, double alpha,
                                          int n, const QuadratureConfig& cfg = {});

}  // namespace fracprob
