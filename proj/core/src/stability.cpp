#include "burgers/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "burgers/errors.hpp"

namespace burgers
{

namespace
{
ConditionCheck upper(std::string what, double value, double bound)
{
    return {std::move(what), value, bound, false, value <= bound};
}

ConditionCheck lower(std::string what, double value, double bound)
{
    return {std::move(what), value, bound, true, bound <= value};
}
}  // namespace

StabilityReport check_conditions(SchemeId id, double cfl, double s, double s_star,
                                 double omega_tau)
{
    StabilityReport r{id, cfl, s, s_star, omega_tau, {}, true};
    switch (id)
    {
    case SchemeId::FTCS:
        r.conditions.push_back(upper("S <= 1/2", s, 0.5));
        r.conditions.push_back(upper("CFL <= 1", cfl, 1.0));
        r.conditions.push_back(upper("CFL^2 <= 2S", cfl * cfl, 2.0 * s));
        break;
    case SchemeId::LaxWendroff:
        r.conditions.push_back(upper("S* <= 1/2", s_star, 0.5));
        r.conditions.push_back(upper("CFL <= 1", cfl, 1.0));
        break;
    case SchemeId::CrankNicolson:
        break;
    case SchemeId::SemiInvariant: {
        const double q = 4.0 * s / 3.0 - 2.0 * s * s + omega_tau;
        r.conditions.push_back(
            upper("CFL^2 - 2S - 2 Omega_tau <= 0", cfl * cfl - 2.0 * s - 2.0 * omega_tau, 0.0));
        r.conditions.push_back(lower("0 <= 4S/3 - 2S^2 + Omega_tau", q, 0.0));
        r.conditions.push_back(upper("4S/3 - 2S^2 + Omega_tau <= 1/2", q, 0.5));
        break;
    }
    }
    r.stable = std::all_of(r.conditions.begin(), r.conditions.end(),
                           [](const ConditionCheck& c) { return c.pass; });
    return r;
}

StabilityReport check_conditions(SchemeId id, const SchemeParams& params, double omega_tau)
{
    return check_conditions(id, params.cfl(), params.s(), params.s_star(), omega_tau);
}

std::complex<double> amplification_symbol(SchemeId id, double cfl, double s, double omega_tau,
                                          double theta)
{
    using namespace std::complex_literals;
    const double sn = std::sin(theta);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const std::complex<double> convection = 1i * cfl * sn;
    const double diffusion = 4.0 * s * s2;

    switch (id)
    {
    case SchemeId::FTCS:
        return 1.0 - convection - diffusion;
    case SchemeId::LaxWendroff:
        return 1.0 - convection - diffusion - 2.0 * cfl * cfl * s2 + 8.0 * s * s * s2 * s2
               + 4.0 * s * s2 * convection;
    case SchemeId::CrankNicolson: {
        const std::complex<double> l = convection + diffusion;
        return (1.0 - 0.5 * l) / (1.0 + 0.5 * l);
    }
    case SchemeId::SemiInvariant:
        return 1.0
               - (convection * (1.0 + 2.0 * s2 / 3.0) + s * (4.0 * s2 + 4.0 * s2 * s2 / 3.0)
                  + 4.0 * omega_tau * s2 - 4.0 * s * s2 * convection - 8.0 * s * s * s2 * s2);
    }
    throw InvalidParameter("unknown scheme");
}

double amplification_factor(SchemeId id, const SchemeParams& params, double omega_tau,
                            double theta)
{
    return std::abs(amplification_symbol(id, params.cfl(), params.s(), omega_tau, theta));
}

double max_amplification(SchemeId id, double cfl, double s, double omega_tau, int theta_samples)
{
    double worst = 0.0;
    for (int k = 0; k < theta_samples; ++k)
    {
        const double theta = 2.0 * std::numbers::pi * k / theta_samples;
        worst = std::max(worst, std::abs(amplification_symbol(id, cfl, s, omega_tau, theta)));
    }
    return worst;
}

//---------------------------------------------------------------------------//

double ScanRange::at(int i) const
{
    return min + (max - min) * i / (samples - 1);
}

int StabilityMap::mismatches(int radius) const
{
    const int nc = static_cast<int>(cfl.size());
    const int ns = static_cast<int>(s.size());
    int count = 0;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < ns; ++j)
        {
            const bool e = empirical[i][j];
            if (e == printed[i][j])
                continue;
            bool matched = false;
            for (int di = -radius; di <= radius && !matched; ++di)
                for (int dj = -radius; dj <= radius && !matched; ++dj)
                {
                    const int a = i + di, b = j + dj;
                    if (a >= 0 && a < nc && b >= 0 && b < ns)
                        matched = printed[a][b] == e;
                }
            count += matched ? 0 : 1;
        }
    return count;
}

int StabilityMap::printed_not_empirical() const
{
    int count = 0;
    for (std::size_t i = 0; i < cfl.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            count += printed[i][j] && !empirical[i][j] ? 1 : 0;
    return count;
}

StabilityMap scan_stability(SchemeId id, const ScanRange& cfl, const ScanRange& s,
                            const OmegaTauRule& omega_tau)
{
    if (cfl.samples < 20 || s.samples < 20)
        throw InvalidParameter("stability scans need at least 20 samples per axis");

    StabilityMap map;
    map.scheme_id = id;
    for (int i = 0; i < cfl.samples; ++i)
        map.cfl.push_back(cfl.at(i));
    for (int j = 0; j < s.samples; ++j)
        map.s.push_back(s.at(j));

    map.empirical.assign(map.cfl.size(), std::vector<bool>(map.s.size()));
    map.printed.assign(map.cfl.size(), std::vector<bool>(map.s.size()));
    for (std::size_t i = 0; i < map.cfl.size(); ++i)
        for (std::size_t j = 0; j < map.s.size(); ++j)
        {
            const double c = map.cfl[i], sv = map.s[j], om = omega_tau(c);
            map.empirical[i][j] = max_amplification(id, c, sv, om) <= 1.0 + stability_tolerance;
            map.printed[i][j] = check_conditions(id, c, sv, combined_number(c, sv), om).stable;
        }
    return map;
}

}  // namespace burgers
