#include "burgers/modified_equation.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"

namespace burgers
{

GSeries g_series(const Series& u, const Dual& nu)
{
    GSeries g;
    g.g1 = nu * u.dx().dx() - (0.5 * (u * u)).dx();
    g.g2 = nu * g.g1.dx().dx() - (g.g1 * u).dx();
    g.g3 = nu * g.g2.dx().dx() - (g.g2 * u + g.g1 * g.g1).dx();
    return g;
}

GFunctions g_functions(const JetPoint& jet, double nu)
{
    const Series& full = jet.series();
    if (full.empty() || full.x_order(0) < 6)
        throw InsufficientJetOrder("g3 needs u_x up to order 6");
    Series u(std::vector<int>{full.x_order(0)});
    for (int j = 0; j <= full.x_order(0); ++j)
        u.coeff(j, 0) = full.coeff(j, 0);
    const GSeries g = g_series(u, Dual(nu));
    return {g.g1.real(), g.g2.real(), g.g3.real()};
}

//---------------------------------------------------------------------------//

namespace
{
Series burgers_rhs(const JetContext& c)
{
    return c.nu() * c.u.dx().dx() - c.u * c.u.dx();
}

// h^2/12 (u^2)_xxx - nu h^2/12 u_xxxx, shared by the three classical schemes.
Series spatial_correction(const JetContext& c)
{
    const Dual h2 = c.h() * c.h();
    const Series u2 = c.u * c.u;
    return (h2 * Dual(1.0 / 12.0)) * (dx(u2, 3) - c.nu() * dx(c.u, 4));
}

JetExpr correction_for(SchemeId id, const OmegaClosure& omega)
{
    switch (id)
    {
    case SchemeId::FTCS:
        return [](const JetContext& c) {
            const GSeries g = g_series(c.u, c.nu());
            return c.tau() * Dual(0.5) * g.g2 + spatial_correction(c);
        };
    case SchemeId::LaxWendroff:
        return [](const JetContext& c) {
            const GSeries g = g_series(c.u, c.nu());
            return c.tau() * c.tau() * Dual(1.0 / 6.0) * g.g3 + spatial_correction(c);
        };
    case SchemeId::CrankNicolson:
        return [](const JetContext& c) {
            const GSeries g = g_series(c.u, c.nu());
            const Series inner = Dual(1.0 / 6.0) * g.g3
                                 + Dual(0.25) * (g.g1 * g.g1 + c.u * g.g2).dx()
                                 - c.nu() * Dual(0.25) * g.g2.dx().dx();
            return c.tau() * c.tau() * inner + spatial_correction(c);
        };
    case SchemeId::SemiInvariant:
        switch (omega.rule)
        {
        case OmegaClosure::Rule::CancelLeadingError:
            return [](const JetContext& c) { return Series(c.u.dx().dx().shape()); };
        case OmegaClosure::Rule::Custom:
            return [c0 = omega.c0](const JetContext& c) {
                const Series ux = c.u.dx();
                return (Dual(c0) * c.h() * abs(ux) * ux).dx();
            };
        case OmegaClosure::Rule::Zero:
            return [](const JetContext& c) {
                return (c.tau() * Dual(0.5) * (c.u * c.u) * c.u.dx()).dx();
            };
        }
        break;
    }
    throw InvalidParameter("unknown scheme");
}

int x_order_for(SchemeId id)
{
    switch (id)
    {
    case SchemeId::FTCS:
        return 4;
    case SchemeId::LaxWendroff:
    case SchemeId::CrankNicolson:
        return 6;
    case SchemeId::SemiInvariant:
        return 2;
    }
    return 6;
}

std::pair<int, int> orders_for(SchemeId id)
{
    switch (id)
    {
    case SchemeId::LaxWendroff:
    case SchemeId::CrankNicolson:
        return {2, 2};
    case SchemeId::FTCS:
    case SchemeId::SemiInvariant:
        return {1, 2};
    }
    return {1, 2};
}
}  // namespace

double DifferentialRepresentation::evaluate(const JetPoint& jet) const
{
    return equation.lhs(JetContext::from_jet(jet)).real();
}

double DifferentialRepresentation::evaluate_correction(const JetPoint& jet) const
{
    return correction(JetContext::from_jet(jet)).real();
}

DifferentialRepresentation differential_representation(SchemeId id, const OmegaClosure& omega)
{
    DifferentialRepresentation rep;
    rep.scheme_id = id;
    rep.correction = correction_for(id, omega);
    rep.leading_orders = orders_for(id);
    rep.equation.name = "differential approximation (" + std::string(short_name(id)) + ")";
    rep.equation.x_order = x_order_for(id);
    rep.equation.rhs = [corr = rep.correction](const JetContext& c) {
        return burgers_rhs(c) - corr(c);
    };
    return rep;
}

JetPoint shock_jet(const ShockSolution& shock, double x, double t, int x_order, int t_levels)
{
    if (x_order < 0 || t_levels < 1)
        throw InvalidParameter("shock jet needs x_order >= 0 and t_levels >= 1");
    JetPoint jet(std::vector<int>(static_cast<std::size_t>(t_levels), x_order));
    jet.x = x;
    jet.t = t;
    jet.nu = shock.nu;
    for (int k = 0; k < t_levels; ++k)
        for (int j = 0; j <= x_order; ++j)
            jet.set_u(j, k, shock.derivative(j, k, x, t));
    return jet;
}

//---------------------------------------------------------------------------//

double scheme_residual(const SchemeConfig& scheme, const ShockSolution& exact,
                       const RefinementLevel& level, double x, double t)
{
    const SchemeParams p{exact.nu, level.h, level.tau, 0.0};
    auto sample = [&](double time) {
        Padded u(1, scheme_ghost_width);
        for (std::ptrdiff_t o = -scheme_ghost_width; o <= scheme_ghost_width; ++o)
            u[o] = exact(x + static_cast<double>(o) * level.h, time);
        return u;
    };
    const Padded now = sample(t);
    const double dt = (exact(x, t + level.tau) - now[0]) / level.tau;

    switch (scheme.id)
    {
    case SchemeId::FTCS:
        return dt + ftcs_rate(now, p)[0];
    case SchemeId::LaxWendroff:
        return dt + lax_wendroff_rate(now, p)[0];
    case SchemeId::SemiInvariant:
        return dt + semi_invariant_rate(now, p, scheme.omega, scheme.semi_corrections)[0];
    case SchemeId::CrankNicolson: {
        const Padded next = sample(t + level.tau);
        const double conv = 0.5 * (centred_convection(now, level.h)[0]
                                   + centred_convection(next, level.h)[0]);
        const double diff = 0.5 * (centred_diffusion(now, level.h)[0]
                                   + centred_diffusion(next, level.h)[0]);
        return dt + conv - exact.nu * diff;
    }
    }
    throw InvalidParameter("unknown scheme");
}

TruncationOrders truncation_order_check(const SchemeConfig& scheme, const ShockSolution& exact,
                                        std::span<const RefinementLevel> levels, double x,
                                        double t)
{
    if (levels.size() < 3)
        throw InvalidParameter("truncation order check needs at least three levels");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i].h < levels[i - 1].h))
            throw InvalidParameter("refinement levels must have decreasing h");

    const DifferentialRepresentation rep = differential_representation(scheme.id, scheme.omega);
    const double floor_scale = 100.0 * DBL_EPSILON * (std::abs(exact.a) + std::abs(exact.b));

    TruncationOrders out;
    for (const RefinementLevel& level : levels)
    {
        JetPoint jet = shock_jet(exact, x, t, rep.equation.x_order + 2, 1);
        jet.h = level.h;
        jet.tau = level.tau;
        const double raw = scheme_residual(scheme, exact, level, x, t);
        const double corrected = raw - rep.evaluate_correction(jet);
        const double floor = floor_scale / level.tau;
        if (std::abs(raw) < floor || std::abs(corrected) < floor)
            throw DegenerateSample("truncation residual at h = " + std::to_string(level.h)
                                   + " is at round-off level");
        out.h.push_back(level.h);
        out.tau.push_back(level.tau);
        out.raw.push_back(std::abs(raw));
        out.corrected.push_back(std::abs(corrected));
    }
    out.raw_slope_h = log_log_slope(out.h, out.raw);
    out.raw_slope_tau = log_log_slope(out.tau, out.raw);
    out.corrected_slope_h = log_log_slope(out.h, out.corrected);
    out.corrected_slope_tau = log_log_slope(out.tau, out.corrected);
    return out;
}

}  // namespace burgers
