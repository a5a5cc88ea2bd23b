#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "burgers/exact.hpp"
#include "burgers/grid.hpp"
#include "burgers/jet.hpp"

namespace burgers
{

/// A point of (x, t, u) space extended by the step sizes and viscosity.
struct PointCoords
{
    double x = 0.0;
    double t = 0.0;
    double u = 0.0;
    double h = 0.0;
    double tau = 0.0;
    double nu = 0.0;
};

enum class GeneratorId
{
    L1,   ///< space translation
    L2,   ///< time translation
    L3,   ///< dilatation (eps x, eps^2 t, u/eps)
    L4,   ///< projective
    L5,   ///< Galilean boost
    L6,   ///< dilatation (x, t/eps, eps u, eps nu)
    L3p,  ///< L3 extended to the steps: (eps h, eps^2 tau)
    L4p,  ///< dilatation (x, t/eps, eps u, h, tau/eps, eps nu)
};

/// How the closed-form group parameter relates to the flow parameter s of the
/// generator: additive (eps = s) or multiplicative (eps = exp(s)).
enum class Parameterization
{
    Additive,
    Multiplicative,
};

/// One-parameter point-transformation group given by its infinitesimals and
/// its closed-form finite transformation.
struct GroupGenerator
{
    using Infinitesimal = std::function<Series(const Series& x, const Series& t, const Series& u)>;
    using StepInfinitesimal = std::function<double(double)>;

    GeneratorId id = GeneratorId::L1;
    std::string name;
    Infinitesimal xi_x;   ///< xi_1(x, t, u)
    Infinitesimal xi_t;   ///< xi_2(x, t, u)
    Infinitesimal eta;    ///< eta(x, t, u)
    StepInfinitesimal zeta_h;    ///< zeta_1(h); empty means 0
    StepInfinitesimal zeta_tau;  ///< zeta_2(tau); empty means 0
    StepInfinitesimal theta_nu;  ///< theta(nu); empty means 0
    Parameterization parameterization = Parameterization::Additive;
    std::function<PointCoords(const PointCoords&, double eps)> finite;

    double identity_parameter() const
    {
        return parameterization == Parameterization::Additive ? 0.0 : 1.0;
    }
    double inverse_parameter(double eps) const;
    double compose_parameters(double a, double b) const;

    /// (xi_1, xi_2, eta, zeta_1, zeta_2, theta) at a point.
    PointCoords infinitesimals(const PointCoords& p) const;
};

/// L1..L6 of the Burgers equation (index 1..6).
GroupGenerator burgers_generator(int index);
std::vector<GroupGenerator> burgers_generators();

/// {L1, L2, L'3, L'4}, the group of the first differential approximations.
std::vector<GroupGenerator> differential_approximation_generators();

GroupGenerator generator(GeneratorId id);

/// Closed-form image of a point. Throws DomainError outside the validity
/// domain (projective 1 - eps t = 0, non-positive dilatation factor).
PointCoords finite_transform(const GroupGenerator& gen, double eps, const PointCoords& point);

/// Integrate dp/ds = infinitesimals(p) from s = 0 to the flow parameter
/// matching eps with classical RK4. ode_steps >= 16.
PointCoords integrate_generator_flow(const GroupGenerator& gen, double eps,
                                     const PointCoords& point, int ode_steps);

/// Prolongation coefficients sigma^{(j,k)} (j x-derivatives, k t-derivatives)
/// for all 1 <= j + k <= order, by the recursive prolongation formula.
using Prolongation = std::map<std::pair<int, int>, double>;
Prolongation prolong_coefficients(const GroupGenerator& gen, const JetPoint& jet, int order);

/// Value of the prolonged generator applied to an equation, and the sum of
/// the absolute values of its individual terms (the natural scale).
struct InvarianceResidual
{
    double residual = 0.0;
    double scale = 0.0;

    double relative() const { return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual); }
};

/// Prolonged generator applied to F = u_t - rhs at a jet on F = 0. Also used
/// for differential approximations, whose jets carry (h, tau, nu).
InvarianceResidual pde_invariance_residual(const GroupGenerator& gen,
                                           const EvolutionEquation& equation,
                                           const JetPoint& constrained_jet);

/// Same criterion for a differential approximation: the prolonged operator
/// includes zeta_1 d/dh, zeta_2 d/dtau and theta d/dnu. The jet must carry h
/// and tau.
InvarianceResidual da_invariance_residual(const GroupGenerator& gen,
                                          const EvolutionEquation& approximation,
                                          const JetPoint& constrained_jet);

/// Burgers u_t = nu u_xx - u u_x.
EvolutionEquation burgers_equation();
/// u_t = -(alpha u u_x + beta u^2 u_x + mu u_xx - s u_xxx).
EvolutionEquation cbkdv_equation(const CbkdvCoefficients& coeffs);

struct JetSampling
{
    int free_order = 12;   ///< highest free x-derivative u_{j,0}
    int t_levels = 2;      ///< derived t-levels
    bool with_steps = false;
    double nu_min = 0.05, nu_max = 1.0;
    double step_min = 0.05, step_max = 0.5;
};

/// Random jet on the solution manifold of `eq`: x, t and u_{j,0} uniform in
/// [-1, 1], nu uniform in [nu_min, nu_max], optional h and tau.
JetPoint sample_constrained_jet(const EvolutionEquation& eq, std::mt19937_64& rng,
                                const JetSampling& sampling = {});

/// Image of a solution field under a finite transformation.
struct TransformedField
{
    ScalarField field;
    double nu;
};
TransformedField transform_solution(const GroupGenerator& gen, double eps, ScalarField field,
                                    double nu);

/// Galilean boost of one time level: values u + eps, origin offset + eps t.
State frame_change(const State& state, double eps);

}  // namespace burgers
