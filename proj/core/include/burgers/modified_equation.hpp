#pragma once

#include <span>
#include <utility>
#include <vector>

#include "burgers/exact.hpp"
#include "burgers/jet.hpp"
#include "burgers/schemes.hpp"

namespace burgers
{

/// g1 = -(u^2/2)_x + nu u_xx, g2 = (-g1 u)_x + nu (g1)_xx,
/// g3 = (-g2 u - g1^2)_x + nu (g2)_xx. Along exact solutions they are u_t,
/// u_tt and u_ttt.
struct GFunctions
{
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
};

struct GSeries
{
    Series g1, g2, g3;
};

/// Series form, for assembling jet expressions.
GSeries g_series(const Series& u, const Dual& nu);

/// Needs u_{j,0} up to j = 6; throws InsufficientJetOrder otherwise.
GFunctions g_functions(const JetPoint& jet, double nu);

/// First differential approximation of a scheme, P = u_t - rhs with
/// rhs = (Burgers right-hand side) - correction.
struct DifferentialRepresentation
{
    SchemeId scheme_id = SchemeId::FTCS;
    /// The jet-space form u_t = rhs(u, u_x, ..., h, tau, nu).
    EvolutionEquation equation;
    /// P minus the Burgers left-hand side; carries every h and tau factor.
    JetExpr correction;
    /// (order in tau, order in h) of the truncation error.
    std::pair<int, int> leading_orders{1, 2};

    /// P at a jet carrying h, tau and nu.
    double evaluate(const JetPoint& jet) const;
    double evaluate_correction(const JetPoint& jet) const;
};

/// Representations for FTCS, Lax-Wendroff and Crank-Nicolson, and for the
/// semi-invariant scheme with C from the Omega rule:
///   cancel: C = 0; custom: C = c0 h |u_x|; zero: C = tau u^2 / 2.
DifferentialRepresentation differential_representation(SchemeId id,
                                                       const OmegaClosure& omega = {});

/// Jet of an exact shock at (x, t): u_{j,k} for j <= x_order, k < t_levels.
JetPoint shock_jet(const ShockSolution& shock, double x, double t, int x_order, int t_levels = 2);

struct RefinementLevel
{
    double h = 0.0;
    double tau = 0.0;
};

struct TruncationOrders
{
    std::vector<double> h;
    std::vector<double> tau;
    std::vector<double> raw;        ///< |scheme residual on the exact solution|
    std::vector<double> corrected;  ///< |scheme residual - representation correction|
    double raw_slope_h = 0.0;
    double raw_slope_tau = 0.0;
    double corrected_slope_h = 0.0;
    double corrected_slope_tau = 0.0;
};

/// Apply the scheme's discrete equations to the exact shock at one node
/// (x, t) for each refinement level and fit log-log slopes, with and without
/// the representation's correction terms. Levels must have decreasing h and
/// at least three entries. Throws DegenerateSample when a residual reaches
/// the round-off floor of the time difference.
TruncationOrders truncation_order_check(const SchemeConfig& scheme, const ShockSolution& exact,
                                        std::span<const RefinementLevel> levels, double x,
                                        double t);

/// Residual of the discrete equations, (u^{n+1} - u^n)/tau + rate, at one
/// node of exact data.
double scheme_residual(const SchemeConfig& scheme, const ShockSolution& exact,
                       const RefinementLevel& level, double x, double t);

}  // namespace burgers
