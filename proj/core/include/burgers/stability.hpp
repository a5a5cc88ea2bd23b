#pragma once

#include <complex>
#include <string>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/schemes.hpp"

namespace burgers
{

/// One printed inequality, `value <= bound` (or `lower <= value` when
/// `lower_bound` is set).
struct ConditionCheck
{
    std::string description;
    double value = 0.0;
    double bound = 0.0;
    bool lower_bound = false;
    bool pass = false;
};

struct StabilityReport
{
    SchemeId scheme_id = SchemeId::FTCS;
    double cfl = 0.0;
    double s = 0.0;
    double s_star = 0.0;
    double omega_tau = 0.0;
    std::vector<ConditionCheck> conditions;
    bool stable = true;  ///< conjunction of the condition flags
};

/// Printed von Neumann conditions:
///   FTCS: S <= 1/2, CFL <= 1, CFL^2 <= 2S
///   Lax-Wendroff: S* <= 1/2, CFL <= 1
///   Crank-Nicolson: none
///   semi-invariant: CFL^2 - 2S - 2 Omega_tau <= 0, 0 <= 4S/3 - 2S^2 + Omega_tau <= 1/2
StabilityReport check_conditions(SchemeId id, double cfl, double s, double s_star,
                                 double omega_tau = 0.0);
StabilityReport check_conditions(SchemeId id, const SchemeParams& params, double omega_tau = 0.0);

/// S* = S + CFL^2 / 2, the Lax-Wendroff combined number.
inline double combined_number(double cfl, double s)
{
    return s + 0.5 * cfl * cfl;
}

/// Fourier symbol of one step of the scheme linearised about u = a, with
/// CFL = a tau / h, S = nu tau / h^2 and Omega_tau = tau * Omega frozen.
std::complex<double> amplification_symbol(SchemeId id, double cfl, double s, double omega_tau,
                                          double theta);

/// |G(theta)| for the linearisation about params.ref_velocity.
double amplification_factor(SchemeId id, const SchemeParams& params, double omega_tau,
                            double theta);

constexpr int stability_theta_samples = 257;

/// max |G| over equispaced phases in [0, 2 pi).
double max_amplification(SchemeId id, double cfl, double s, double omega_tau,
                         int theta_samples = stability_theta_samples);

struct ScanRange
{
    double min = 0.0;
    double max = 1.0;
    int samples = 20;  ///< inclusive of both ends, >= 20

    double at(int i) const;
};

/// Omega_tau used at each scan cell: fixed, or the leading-error-cancelling
/// value CFL^2 / 2.
struct OmegaTauRule
{
    bool cancel = false;
    double value = 0.0;

    static OmegaTauRule fixed(double v) { return {false, v}; }
    static OmegaTauRule cancelling() { return {true, 0.0}; }
    double operator()(double cfl) const { return cancel ? 0.5 * cfl * cfl : value; }
};

struct StabilityMap
{
    SchemeId scheme_id = SchemeId::FTCS;
    std::vector<double> cfl;
    std::vector<double> s;
    /// Indexed [i_cfl][i_s].
    std::vector<std::vector<bool>> empirical;
    std::vector<std::vector<bool>> printed;

    /// Cells where the verdicts differ and no printed verdict within `radius`
    /// cells (Chebyshev distance) matches the empirical one.
    int mismatches(int radius = 1) const;
    /// Cells printed stable but empirically unstable.
    int printed_not_empirical() const;
};

constexpr double stability_tolerance = 1e-12;

/// Empirical verdict max |G| <= 1 + 1e-12 next to check_conditions on a
/// (CFL, S) grid. Throws InvalidParameter for fewer than 20 samples per axis.
StabilityMap scan_stability(SchemeId id, const ScanRange& cfl, const ScanRange& s,
                            const OmegaTauRule& omega_tau = {});

}  // namespace burgers
