#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burgers/exact.hpp"
#include "burgers/schemes.hpp"
#include "burgers/stability.hpp"

namespace burgers
{

enum class InitialCondition
{
    Shock,  ///< travelling tanh shock, Dirichlet data from the exact solution
    Wavy,   ///< periodic Cole-Hopf solution
};

/// Validated experiment description. The derived fields are filled by
/// parse_config: h = length / n_points, a = max |u0| over the F1 nodes,
/// tau = CFL h / a, nu = a h / Re_h (or Re_h = a h / nu).
struct ExperimentConfig
{
    std::vector<SchemeId> schemes;
    InitialCondition ic = InitialCondition::Shock;
    double shock_a = 0.0;
    double shock_b = 1.0;
    double wavy_amplitude = 2.0;
    double x_min = -1.0;
    double length = 2.0;
    std::size_t n_points = 0;
    double cfl = 0.0;
    double t_end = 0.0;
    std::vector<double> frames{0.0, 0.25, 0.5};
    OmegaClosure omega{};
    std::string output = "burgers";
    bool merged = false;

    // Derived
    double re_h = 0.0;
    double nu = 0.0;
    double h = 0.0;
    double ref_velocity = 0.0;
    double tau = 0.0;
    std::size_t n_steps = 0;

    SchemeParams params() const { return {nu, h, tau, ref_velocity}; }
    Boundary boundary() const;
    /// Exact solution in the rest frame F1.
    ScalarField exact_solution() const;
    /// Omega_tau of the linearised semi-invariant scheme under the active rule.
    double omega_tau() const;
};

/// Parse "key = value" lines. Keys other than the ic.* family are matched
/// case-insensitively; ic.a (shock velocity) and ic.A (wavy amplitude) are
/// distinct. Throws ConfigError with the offending line.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct ErrorSeries
{
    std::size_t frame_index = 0;  ///< 0 for F1
    double frame_velocity = 0.0;
    SchemeId scheme = SchemeId::FTCS;
    /// (t, L2 error) after every completed step.
    std::vector<std::pair<double, double>> rows;
    std::optional<std::size_t> blowup_step;

    double final_error() const;
    double max_error() const;
};

struct FrameMetadata
{
    std::size_t frame_index = 0;
    double frame_velocity = 0.0;
    double cfl = 0.0;
    double re_h = 0.0;
    std::map<SchemeId, StabilityReport> stability;
};

struct ExperimentResult
{
    std::vector<ErrorSeries> series;  ///< ordered by scheme, then frame
    std::vector<FrameMetadata> frames;

    const ErrorSeries& find(SchemeId scheme, std::size_t frame_index) const;
};

/// Run every configured scheme in every frame. A frame with velocity eps
/// starts from the boosted initial state and is compared with the boosted
/// exact solution on the same mesh; tau and a are those of F1.
ExperimentResult run_frame_experiment(const ExperimentConfig& config);

/// Ratio of the largest to the smallest final error across frames; infinite
/// when a frame blew up.
double cross_frame_spread(const ExperimentResult& result, SchemeId scheme);

struct ConvergenceLevel
{
    std::size_t n_points = 0;
    double h = 0.0;
    double tau = 0.0;
    double error = 0.0;  ///< L2 error at t_end, infinite after a blow-up
};

struct ConvergenceStudy
{
    std::vector<ConvergenceLevel> levels;
    double slope_h = 0.0;
    double slope_tau = 0.0;
};

/// Joint refinement against the exact shock on a DirichletExact mesh. Each
/// level uses tau = tau_of_h(h), shortened so that t_end is a whole number of
/// steps.
ConvergenceStudy convergence_study(const SchemeConfig& scheme, const ShockSolution& exact,
                                   double x_min, double length,
                                   std::span<const std::size_t> n_points,
                                   const std::function<double(double)>& tau_of_h, double t_end);

/// File name -> content. Per-series files are "<output>_<scheme>_F<k>.csv"
/// with header "t,err"; merged files are "<output>_<scheme>.csv" with header
/// "t,err_F1,...". Blow-ups end a file with "# blowup_step=k" (merged:
/// "# blowup_step[F<k>]=k").
std::map<std::string, std::string> render_csv(const std::vector<ErrorSeries>& series,
                                              const std::string& output, bool merged);

/// Write render_csv's files; returns the paths written.
std::vector<std::filesystem::path> write_csv(const std::vector<ErrorSeries>& series,
                                             const std::string& output, bool merged);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace burgers
