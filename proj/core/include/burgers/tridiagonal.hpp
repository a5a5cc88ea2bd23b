#pragma once

#include <span>
#include <vector>

namespace burgers
{

/// Constant-coefficient tridiagonal operator: lower, diag, upper.
struct TridiagonalCoeffs
{
    double lower;
    double diag;
    double upper;
};

/// Thomas algorithm for the n x n system with constant bands.
void solve_tridiagonal(const TridiagonalCoeffs& a, std::span<const double> rhs,
                       std::span<double> x);

/// Periodic (cyclic) tridiagonal system: corner entries a.lower at (0, n-1)
/// and a.upper at (n-1, 0). Sherman-Morrison on top of Thomas.
void solve_cyclic_tridiagonal(const TridiagonalCoeffs& a, std::span<const double> rhs,
                              std::span<double> x);

}  // namespace burgers
