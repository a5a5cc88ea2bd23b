#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burgers/errors.hpp"
#include "burgers/experiments.hpp"
#include "burgers/modified_equation.hpp"
#include "burgers/stability.hpp"
#include "burgers/symmetry.hpp"

using namespace burgers;

namespace
{
constexpr int exit_config_error = 2;
constexpr int exit_blowup = 3;

OmegaClosure parse_omega_option(const std::string& s)
{
    if (s == "cancel")
        return OmegaClosure::cancel();
    if (s == "zero")
        return OmegaClosure::zero();
    if (s.rfind("custom:", 0) == 0)
        return OmegaClosure::custom(std::stod(s.substr(7)));
    throw InvalidParameter("omega must be cancel, zero or custom:<c0>");
}

void print_report(const StabilityReport& r)
{
    std::printf("scheme %s  CFL=%g  S=%g  S*=%g  Omega_tau=%g\n",
                std::string(short_name(r.scheme_id)).c_str(), r.cfl, r.s, r.s_star, r.omega_tau);
    if (r.conditions.empty())
        std::printf("  no conditions (unconditionally stable)\n");
    for (const ConditionCheck& c : r.conditions)
        std::printf("  %-34s value=% .6g  bound=%g  %s\n", c.description.c_str(), c.value, c.bound,
                    c.pass ? "ok" : "VIOLATED");
    std::printf("  verdict: %s\n", r.stable ? "stable" : "unstable");
}

int cmd_run(const std::string& path, bool strict)
{
    const ExperimentConfig config = load_config(path);
    std::printf("h=%g  tau=%g  nu=%g  a=%g  CFL=%g  Re_h=%g  steps=%zu\n", config.h, config.tau,
                config.nu, config.ref_velocity, config.cfl, config.re_h, config.n_steps);

    const ExperimentResult result = run_frame_experiment(config);
    for (const FrameMetadata& f : result.frames)
    {
        std::printf("F%zu (boost %g): CFL=%g Re_h=%g", f.frame_index + 1, f.frame_velocity, f.cfl,
                    f.re_h);
        for (const auto& [id, report] : f.stability)
            std::printf("  %s:%s", std::string(short_name(id)).c_str(),
                        report.stable ? "stable" : "unstable");
        std::printf("\n");
    }

    bool blew_up = false;
    for (const ErrorSeries& s : result.series)
    {
        std::printf("%-4s F%zu  ", std::string(short_name(s.scheme)).c_str(), s.frame_index + 1);
        if (s.blowup_step)
        {
            blew_up = true;
            std::printf("blow-up after %zu steps\n", *s.blowup_step);
        }
        else
        {
            std::printf("final L2 error %.6e  max %.6e\n", s.final_error(), s.max_error());
        }
    }
    for (SchemeId id : config.schemes)
        std::printf("cross-frame spread %-4s %g\n", std::string(short_name(id)).c_str(),
                    cross_frame_spread(result, id));

    for (const auto& p : write_csv(result.series, config.output, config.merged))
        std::printf("wrote %s\n", p.string().c_str());
    return strict && blew_up ? exit_blowup : 0;
}

int cmd_scan(SchemeId id, double cfl_max, double s_max, int samples, const std::string& omega)
{
    const OmegaTauRule rule =
        omega == "cancel" ? OmegaTauRule::cancelling() : OmegaTauRule::fixed(std::stod(omega));
    const StabilityMap map = scan_stability(id, {0.0, cfl_max, samples}, {0.0, s_max, samples}, rule);

    std::printf("rows: CFL from %g (top) to 0; columns: S from 0 to %g\n", cfl_max, s_max);
    std::printf("# stable both, E empirical only, P printed only, . unstable both\n");
    for (std::size_t ii = map.cfl.size(); ii-- > 0;)
    {
        std::printf("%6.3f ", map.cfl[ii]);
        for (std::size_t j = 0; j < map.s.size(); ++j)
        {
            const bool e = map.empirical[ii][j], p = map.printed[ii][j];
            std::putchar(e && p ? '#' : e ? 'E' : p ? 'P' : '.');
        }
        std::putchar('\n');
    }
    std::printf("printed-stable but empirically unstable: %d\n", map.printed_not_empirical());
    std::printf("mismatches beyond one cell: %d\n", map.mismatches(1));
    return 0;
}

int cmd_verify(const std::string& equation, int samples, unsigned seed, double alpha, double beta,
               double mu, double s)
{
    const EvolutionEquation eq =
        equation == "burgers" ? burgers_equation() : cbkdv_equation({alpha, beta, mu, s});
    std::mt19937_64 rng(seed);
    std::vector<JetPoint> jets;
    for (int k = 0; k < samples; ++k)
        jets.push_back(sample_constrained_jet(eq, rng));

    std::printf("%-32s %14s %14s  verdict\n", "generator", "max rel", "median rel");
    for (const GroupGenerator& g : burgers_generators())
    {
        std::vector<double> rel;
        for (const JetPoint& jet : jets)
            rel.push_back(pde_invariance_residual(g, eq, jet).relative());
        std::sort(rel.begin(), rel.end());
        const double median = rel[rel.size() / 2];
        const char* verdict = rel.back() <= 1e-8 ? "symmetry" : median >= 1e-2 ? "broken" : "unclear";
        std::printf("%-32s %14.3e %14.3e  %s\n", g.name.c_str(), rel.back(), median, verdict);
    }
    return 0;
}

int cmd_orders(SchemeId id, const std::string& omega)
{
    SchemeConfig scheme;
    scheme.id = id;
    scheme.omega = parse_omega_option(omega);
    const bool parabolic = id == SchemeId::FTCS || id == SchemeId::SemiInvariant;

    const ShockSolution shock{0.5, 0.5, 0.2, 0.0};
    const std::vector<std::size_t> meshes{32, 64, 128, 256};
    const double h_min = 2.0 / 256.0;
    const auto tau_of_h = [&](double h) { return parabolic ? h * h : 0.4 * h_min / shock.nu * h; };
    const ConvergenceStudy study = convergence_study(scheme, shock, -1.0, 2.0, meshes, tau_of_h, 0.2);
    std::printf("convergence against the exact shock (%s refinement)\n",
                parabolic ? "tau ~ h^2" : "tau ~ h");
    for (const ConvergenceLevel& l : study.levels)
        std::printf("  n=%4zu h=%.5f tau=%.3e  L2 error %.4e\n", l.n_points, l.h, l.tau, l.error);
    std::printf("  slope in h %.3f, slope in tau %.3f\n", study.slope_h, study.slope_tau);

    const ShockSolution smooth{0.5, 1.0, 0.5, 0.0};
    std::vector<RefinementLevel> levels;
    for (double h = parabolic ? 0.2 : 0.1; h > (parabolic ? 0.02 : 0.005); h /= 2.0)
        levels.push_back({h, parabolic ? 0.5 * h * h : 0.2 * h});
    const TruncationOrders t = truncation_order_check(scheme, smooth, levels, 0.7, 0.1);
    std::printf("truncation residual at (0.7, 0.1)\n");
    for (std::size_t i = 0; i < t.h.size(); ++i)
        std::printf("  h=%.5f raw %.4e  corrected %.4e\n", t.h[i], t.raw[i], t.corrected[i]);
    std::printf("  raw slope h %.3f tau %.3f; corrected slope h %.3f tau %.3f\n", t.raw_slope_h,
                t.raw_slope_tau, t.corrected_slope_h, t.corrected_slope_tau);
    return 0;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-difference lab for the viscous Burgers equation"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a frame experiment from a config file");
    std::string config_path;
    bool strict = false;
    run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    run->add_flag("--strict", strict, "Exit with status 3 when any run blows up");

    std::string scheme_name;
    auto* stab = app.add_subcommand("stability", "Check the printed stability conditions");
    double cfl = 0.0, s = 0.0, omega_tau = 0.0;
    stab->add_option("scheme", scheme_name, "ftcs|lw|cn|semi")->required();
    stab->add_option("--cfl", cfl, "CFL number")->required();
    stab->add_option("--s", s, "Diffusion number S")->required();
    stab->add_option("--omega-tau", omega_tau, "Omega_tau (semi-invariant only)");

    auto* scan = app.add_subcommand("scan", "Empirical |G| scan against the printed conditions");
    double cfl_max = 1.5, s_max = 1.0;
    int samples = 20;
    std::string scan_omega = "0";
    scan->add_option("scheme", scheme_name, "ftcs|lw|cn|semi")->required();
    scan->add_option("--cfl-max", cfl_max, "Largest CFL")->capture_default_str();
    scan->add_option("--s-max", s_max, "Largest S")->capture_default_str();
    scan->add_option("--samples", samples, "Samples per axis (>= 20)")->capture_default_str();
    scan->add_option("--omega-tau", scan_omega, "Fixed Omega_tau or 'cancel'")->capture_default_str();

    auto* verify = app.add_subcommand("verify-symmetries", "Check the Burgers generators on random jets");
    std::string equation = "burgers";
    int jets = 100;
    unsigned seed = 20240901u;
    double alpha = 1.0, beta = 0.7, mu = -0.3, disp = 0.2;
    verify->add_option("--equation", equation, "burgers|cbkdv")
        ->check(CLI::IsMember({"burgers", "cbkdv"}))
        ->capture_default_str();
    verify->add_option("--samples", jets, "Number of random jets")->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--alpha", alpha, "CBKDV alpha")->capture_default_str();
    verify->add_option("--beta", beta, "CBKDV beta")->capture_default_str();
    verify->add_option("--mu", mu, "CBKDV mu")->capture_default_str();
    verify->add_option("--s", disp, "CBKDV dispersion s")->capture_default_str();

    auto* orders = app.add_subcommand("orders", "Measure convergence and truncation orders");
    std::string orders_omega = "cancel";
    orders->add_option("scheme", scheme_name, "ftcs|lw|cn|semi")->required();
    orders->add_option("--omega", orders_omega, "cancel|zero|custom:<c0>")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run)
            return cmd_run(config_path, strict);
        if (*stab)
        {
            const SchemeId id = parse_scheme(scheme_name);
            print_report(check_conditions(id, cfl, s, combined_number(cfl, s), omega_tau));
            std::printf("  max |G| over %d phases: %.15g\n", stability_theta_samples,
                        max_amplification(id, cfl, s, omega_tau));
            return 0;
        }
        if (*scan)
            return cmd_scan(parse_scheme(scheme_name), cfl_max, s_max, samples, scan_omega);
        if (*verify)
            return cmd_verify(equation, jets, seed, alpha, beta, mu, disp);
        if (*orders)
            return cmd_orders(parse_scheme(scheme_name), orders_omega);
    }
    catch (const ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
