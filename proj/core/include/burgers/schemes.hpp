#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers
{

enum class SchemeId
{
    FTCS,
    LaxWendroff,
    CrankNicolson,
    SemiInvariant,
};

inline constexpr SchemeId all_schemes[] = {SchemeId::FTCS, SchemeId::LaxWendroff,
                                           SchemeId::CrankNicolson, SchemeId::SemiInvariant};

/// Short names used by configs and the CLI: ftcs, lw, cn, semi.
std::string_view short_name(SchemeId id);
SchemeId parse_scheme(std::string_view name);

/// Closure for the artificial-viscosity coefficient Omega of the
/// semi-invariant scheme, evaluated at half nodes.
struct OmegaClosure
{
    enum class Rule
    {
        CancelLeadingError,  ///< Omega = tau u^2 / (2 h^2), so C = 0
        Custom,              ///< Omega = tau u^2/(2h^2) - c0 |u_{i+1}-u_i| / h^2, C = c0 h |u_x|
        Zero,                ///< Omega = 0 (diagnostic)
    };

    Rule rule = Rule::CancelLeadingError;
    double c0 = 0.0;

    static OmegaClosure cancel() { return {}; }
    static OmegaClosure custom(double c0) { return {Rule::Custom, c0}; }
    static OmegaClosure zero() { return {Rule::Zero, 0.0}; }

    /// Omega_{i+1/2} from the two neighbouring nodal values.
    double at_half_node(double u_left, double u_right, double tau, double h) const;
};

/// Everything needed to pick and parameterise a stepper.
struct SchemeConfig
{
    SchemeId id = SchemeId::FTCS;
    OmegaClosure omega{};
    /// Keep the fourth-order operators and the nu*tau corrections of the
    /// semi-invariant scheme. Off reduces it to FTCS plus the Omega term.
    bool semi_corrections = true;
    double cn_tol = 1e-12;
    std::size_t cn_max_iter = 50;
};

//---------------------------------------------------------------------------//
// Spatial operators. Each explicit scheme reads
//   (u^{n+1}_i - u^n_i) / tau + rate_i(u^n) = 0
// where `rate` is evaluated on an array padded with two ghost cells.
//---------------------------------------------------------------------------//

constexpr int scheme_ghost_width = 2;

std::vector<double> ftcs_rate(const Padded& u, const SchemeParams& p);
std::vector<double> lax_wendroff_rate(const Padded& u, const SchemeParams& p);
std::vector<double> semi_invariant_rate(const Padded& u, const SchemeParams& p,
                                        const OmegaClosure& omega, bool corrections = true);

/// Centred convective and diffusive parts shared by FTCS and Crank-Nicolson:
/// mu delta (u^2/2) / h and delta^2 u / h^2.
std::vector<double> centred_convection(const Padded& u, double h);
std::vector<double> centred_diffusion(const Padded& u, double h);

State step_ftcs(const State& state, const SchemeParams& params);
State step_lax_wendroff(const State& state, const SchemeParams& params);
State step_semi_invariant(const State& state, const SchemeParams& params,
                          const OmegaClosure& omega = {}, bool corrections = true);

struct CrankNicolsonStep
{
    State state;
    std::size_t iterations = 0;
    double last_change = 0.0;
};

/// Trapezoidal Crank-Nicolson step. The convective term at the new level is
/// lagged at the previous Picard iterate; each iterate solves the (cyclic)
/// tridiagonal diffusion system exactly. Throws ConvergenceFailure.
CrankNicolsonStep crank_nicolson_step(const State& state, const SchemeParams& params,
                                      double tol = 1e-12, std::size_t max_iter = 50);
State step_crank_nicolson(const State& state, const SchemeParams& params, double tol = 1e-12,
                          std::size_t max_iter = 50);

State step(const SchemeConfig& scheme, const State& state, const SchemeParams& params);

/// Throws BlowUp (step 0) at the first non-finite value.
void check_finite(std::span<const double> values);

using Observer = std::function<void(const State& state, std::size_t step)>;

struct RunResult
{
    State final_state;
    std::size_t steps_completed = 0;
    /// Steps completed before the solution became non-finite.
    std::optional<std::size_t> blowup_step;
    std::optional<std::size_t> blowup_index;
};

/// Advance n_steps (>= 1), calling every observer after each successful step.
/// Stops at the first blow-up and records it; other errors propagate.
RunResult run(const SchemeConfig& scheme, const State& initial, const SchemeParams& params,
              std::size_t n_steps, std::span<const Observer> observers = {});

}  // namespace burgers
