#pragma once

#include "burgers/grid.hpp"

namespace burgers
{

/// Viscous travelling shock u = a - b tanh(b (x - a t - x0) / (2 nu)).
struct ShockSolution
{
    double a = 0.0;
    double b = 1.0;
    double nu = 0.1;
    double x0 = 0.0;

    double operator()(double x, double t) const;

    /// d^{jx + jt} u / dx^jx dt^jt, exact. Used to build jets along the solution.
    double derivative(int jx, int jt, double x, double t) const;
};

/// Cole-Hopf solution u = 2 nu k e sin(kx) / (A + e cos(kx)), e = exp(-nu k^2 t),
/// k = 2 pi / L. Periodic in x with period L.
struct WavySolution
{
    double amplitude = 2.0;  ///< A, must exceed 1
    double nu = 0.1;
    double period = 2.0;     ///< L

    double operator()(double x, double t) const;
};

/// Galilean image of a solution: ub(x, t) = eps + u(x - eps t, t).
ScalarField boost_field(ScalarField field, double eps);

/// u_t + alpha u u_x + beta u^2 u_x + mu u_xx - s u_xxx = 0
struct CbkdvCoefficients
{
    double alpha = 1.0;
    double beta = 0.0;
    double mu = 0.0;
    double s = 0.0;

    /// Burgers as the special case (1, 0, -nu, 0).
    static CbkdvCoefficients burgers(double nu) { return {1.0, 0.0, -nu, 0.0}; }
};

/// Fourth-order centred derivatives of a field at (x, t) with probe spacing h.
struct ProbeDerivatives
{
    double u, u_t, u_x, u_xx, u_xxx;
};
ProbeDerivatives probe_derivatives(const ScalarField& field, double x, double t, double probe_h);

double burgers_residual(const ScalarField& field, double nu, double x, double t,
                        double probe_h = 1e-3);

double cbkdv_residual(const ScalarField& field, const CbkdvCoefficients& coeffs, double x,
                      double t, double probe_h = 1e-3);

}  // namespace burgers
