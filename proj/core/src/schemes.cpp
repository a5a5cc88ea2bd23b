#include "burgers/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/tridiagonal.hpp"

namespace burgers
{

std::string_view short_name(SchemeId id)
{
    switch (id)
    {
    case SchemeId::FTCS:
        return "ftcs";
    case SchemeId::LaxWendroff:
        return "lw";
    case SchemeId::CrankNicolson:
        return "cn";
    case SchemeId::SemiInvariant:
        return "semi";
    }
    return "?";
}

SchemeId parse_scheme(std::string_view name)
{
    for (SchemeId id : all_schemes)
        if (short_name(id) == name)
            return id;
    throw InvalidParameter("unknown scheme '" + std::string(name) + "' (expected ftcs|lw|cn|semi)");
}

double OmegaClosure::at_half_node(double u_left, double u_right, double tau, double h) const
{
    const double um = 0.5 * (u_left + u_right);
    switch (rule)
    {
    case Rule::CancelLeadingError:
        return tau * um * um / (2.0 * h * h);
    case Rule::Custom:
        return tau * um * um / (2.0 * h * h) - c0 * std::abs(u_right - u_left) / (h * h);
    case Rule::Zero:
        return 0.0;
    }
    return 0.0;
}

//---------------------------------------------------------------------------//

namespace
{
Padded half_square(const Padded& u)
{
    Padded f(u.size(), u.pad());
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    for (std::ptrdiff_t i = -u.pad(); i < n + u.pad(); ++i)
        f[i] = 0.5 * u[i] * u[i];
    return f;
}

// E^{1/2} u_i = (u_i + u_{i+1}) / 2
inline double up(const Padded& u, std::ptrdiff_t i)
{
    return 0.5 * (u[i] + u[i + 1]);
}

// Flux u_{i+1/2} * delta^2(E^{1/2} u)_i of the viscous correction pair.
inline double viscous_pair_flux(const Padded& u, std::ptrdiff_t i)
{
    const double c = up(u, i);
    return c * (up(u, i + 1) - 2.0 * c + up(u, i - 1));
}

void require_width(const Padded& u)
{
    if (u.pad() < scheme_ghost_width)
        throw InvalidParameter("scheme kernels need two ghost cells");
}

State advance(const State& state, const std::vector<double>& rate, double tau)
{
    State next{std::vector<double>(state.values.size()), state.time + tau, state.grid};
    for (std::size_t i = 0; i < rate.size(); ++i)
        next.values[i] = state.values[i] - tau * rate[i];
    check_finite(next.values);
    return next;
}
}  // namespace

std::vector<double> centred_convection(const Padded& u, double h)
{
    const Padded f = half_square(u);
    std::vector<double> out(u.size());
    for (std::size_t k = 0; k < out.size(); ++k)
    {
        const auto i = static_cast<std::ptrdiff_t>(k);
        out[k] = 0.5 * (f[i + 1] - f[i - 1]) / h;
    }
    return out;
}

std::vector<double> centred_diffusion(const Padded& u, double h)
{
    std::vector<double> out(u.size());
    for (std::size_t k = 0; k < out.size(); ++k)
    {
        const auto i = static_cast<std::ptrdiff_t>(k);
        out[k] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
    }
    return out;
}

std::vector<double> ftcs_rate(const Padded& u, const SchemeParams& p)
{
    require_width(u);
    std::vector<double> rate = centred_convection(u, p.h);
    const std::vector<double> diff = centred_diffusion(u, p.h);
    for (std::size_t k = 0; k < rate.size(); ++k)
        rate[k] -= p.nu * diff[k];
    return rate;
}

std::vector<double> lax_wendroff_rate(const Padded& u, const SchemeParams& p)
{
    require_width(u);
    const double h = p.h, tau = p.tau, nu = p.nu;
    const double h2 = h * h, h3 = h2 * h, h4 = h2 * h2;
    const Padded f = half_square(u);

    std::vector<double> rate = ftcs_rate(u, p);
    for (std::size_t k = 0; k < rate.size(); ++k)
    {
        const auto i = static_cast<std::ptrdiff_t>(k);
        auto v = [&](std::ptrdiff_t o) { return u[i + o]; };
        auto g = [&](std::ptrdiff_t o) { return f[i + o]; };

        const double convective = up(u, i) * (f[i + 1] - f[i]) - up(u, i - 1) * (f[i] - f[i - 1]);
        const double viscous_pair = viscous_pair_flux(u, i) - viscous_pair_flux(u, i - 1);

        const double a = -tau / (2.0 * h2) * convective
                         - nu * nu * tau / 2.0 * stencil::delta4<double>(v) / h4
                         + nu * tau / (2.0 * h3) * viscous_pair
                         + nu * tau / 2.0 * stencil::mu_delta3<double>(g) / h3;
        rate[k] += a;
    }
    return rate;
}

std::vector<double> semi_invariant_rate(const Padded& u, const SchemeParams& p,
                                        const OmegaClosure& omega, bool corrections)
{
    require_width(u);
    const double h = p.h, tau = p.tau, nu = p.nu;
    const double h2 = h * h, h3 = h2 * h, h4 = h2 * h2;
    const Padded f = half_square(u);

    std::vector<double> rate(u.size());
    for (std::size_t k = 0; k < rate.size(); ++k)
    {
        const auto i = static_cast<std::ptrdiff_t>(k);
        auto v = [&](std::ptrdiff_t o) { return u[i + o]; };
        auto g = [&](std::ptrdiff_t o) { return f[i + o]; };

        double convection = stencil::mu_delta<double>(g);
        double diffusion = stencil::delta2<double>(v);
        if (corrections)
        {
            convection -= stencil::mu_delta3<double>(g) / 6.0;
            diffusion -= stencil::delta4<double>(v) / 12.0;
        }

        const double om_right = omega.at_half_node(u[i], u[i + 1], tau, h);
        const double om_left = omega.at_half_node(u[i - 1], u[i], tau, h);
        const double artificial = om_right * (u[i + 1] - u[i]) - om_left * (u[i] - u[i - 1]);

        double r = convection / h - nu * diffusion / h2 - artificial;
        if (corrections)
        {
            r += nu * tau / (2.0 * h3) * (viscous_pair_flux(u, i) - viscous_pair_flux(u, i - 1))
                 - nu * nu * tau / 2.0 * stencil::delta4<double>(v) / h4
                 + nu * tau / 2.0 * stencil::mu_delta3<double>(g) / h3;
        }
        rate[k] = r;
    }
    return rate;
}

//---------------------------------------------------------------------------//

void check_finite(std::span<const double> values)
{
    const auto it = std::find_if(values.begin(), values.end(),
                                 [](double v) { return !std::isfinite(v); });
    if (it != values.end())
        throw BlowUp(0, static_cast<std::size_t>(it - values.begin()));
}

State step_ftcs(const State& state, const SchemeParams& params)
{
    return advance(state, ftcs_rate(pad(state, scheme_ghost_width), params), params.tau);
}

State step_lax_wendroff(const State& state, const SchemeParams& params)
{
    return advance(state, lax_wendroff_rate(pad(state, scheme_ghost_width), params), params.tau);
}

State step_semi_invariant(const State& state, const SchemeParams& params,
                          const OmegaClosure& omega, bool corrections)
{
    return advance(state,
                   semi_invariant_rate(pad(state, scheme_ghost_width), params, omega, corrections),
                   params.tau);
}

CrankNicolsonStep crank_nicolson_step(const State& state, const SchemeParams& params, double tol,
                                      std::size_t max_iter)
{
    if (!(tol > 0.0))
        throw InvalidParameter("Crank-Nicolson tolerance must be positive");
    if (max_iter < 1)
        throw InvalidParameter("Crank-Nicolson needs max_iter >= 1");

    const double tau = params.tau, h = params.h;
    const double half_s = 0.5 * params.nu * tau / (h * h);
    const Grid1D& grid = state.grid;
    const std::size_t n = state.values.size();
    const bool periodic = grid.boundary() == Boundary::Periodic;
    const double t_new = state.time + tau;

    // Explicit half: u^n - tau/2 [conv(u^n) - nu diff(u^n)]
    const Padded un = pad(state, 1);
    const std::vector<double> conv_old = centred_convection(un, h);
    std::vector<double> explicit_part(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        const auto i = static_cast<std::ptrdiff_t>(k);
        explicit_part[k] = state.values[k] - 0.5 * tau * conv_old[k]
                           + half_s * (un[i + 1] - 2.0 * un[i] + un[i - 1]);
    }

    // (1 + S) v_i - S/2 (v_{i+1} + v_{i-1}) = rhs_i
    const TridiagonalCoeffs matrix{-half_s, 1.0 + 2.0 * half_s, -half_s};

    double ghost_left = 0.0, ghost_right = 0.0;
    if (!periodic)
    {
        if (!grid.has_boundary_data())
            throw BoundaryDataMissing("Crank-Nicolson step needs boundary data on a DirichletExact grid");
        ghost_left = grid.boundary_data()(grid.x(-1), t_new);
        ghost_right = grid.boundary_data()(grid.x(static_cast<std::ptrdiff_t>(n)), t_new);
    }

    State iterate{state.values, t_new, grid};
    std::vector<double> rhs(n), next(n);
    double change = 0.0;
    for (std::size_t it = 1; it <= max_iter; ++it)
    {
        const std::vector<double> conv_new = centred_convection(pad(iterate, 1), h);
        for (std::size_t k = 0; k < n; ++k)
            rhs[k] = explicit_part[k] - 0.5 * tau * conv_new[k];
        if (periodic)
        {
            solve_cyclic_tridiagonal(matrix, rhs, next);
        }
        else
        {
            rhs.front() += half_s * ghost_left;
            rhs.back() += half_s * ghost_right;
            solve_tridiagonal(matrix, rhs, next);
        }
        check_finite(next);

        change = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            change = std::max(change, std::abs(next[k] - iterate.values[k]));
        iterate.values.swap(next);
        if (change <= tol)
            return {std::move(iterate), it, change};
    }
    throw ConvergenceFailure(max_iter, change);
}

State step_crank_nicolson(const State& state, const SchemeParams& params, double tol,
                          std::size_t max_iter)
{
    return crank_nicolson_step(state, params, tol, max_iter).state;
}

State step(const SchemeConfig& scheme, const State& state, const SchemeParams& params)
{
    switch (scheme.id)
    {
    case SchemeId::FTCS:
        return step_ftcs(state, params);
    case SchemeId::LaxWendroff:
        return step_lax_wendroff(state, params);
    case SchemeId::CrankNicolson:
        return step_crank_nicolson(state, params, scheme.cn_tol, scheme.cn_max_iter);
    case SchemeId::SemiInvariant:
        return step_semi_invariant(state, params, scheme.omega, scheme.semi_corrections);
    }
    throw InvalidParameter("unknown scheme");
}

RunResult run(const SchemeConfig& scheme, const State& initial, const SchemeParams& params,
              std::size_t n_steps, std::span<const Observer> observers)
{
    if (n_steps < 1)
        throw InvalidParameter("run needs n_steps >= 1");

    RunResult result{initial, 0, std::nullopt, std::nullopt};
    for (std::size_t s = 1; s <= n_steps; ++s)
    {
        try
        {
            result.final_state = step(scheme, result.final_state, params);
        }
        catch (const BlowUp& e)
        {
            result.blowup_step = s - 1;
            result.blowup_index = e.index();
            return result;
        }
        result.steps_completed = s;
        for (const auto& observe : observers)
            observe(result.final_state, s);
    }
    return result;
}

}  // namespace burgers
