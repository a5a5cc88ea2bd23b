#include "burgers/exact.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "burgers/errors.hpp"

namespace burgers
{

namespace
{
// n-th derivative of tanh as a polynomial in T = tanh(z):
// P_0 = T, P_{n+1}(T) = P_n'(T) (1 - T^2).
double tanh_derivative(int n, double z)
{
    std::vector<double> p{0.0, 1.0};
    for (int k = 0; k < n; ++k)
    {
        std::vector<double> next(p.size() + 1, 0.0);
        for (std::size_t i = 1; i < p.size(); ++i)
        {
            const double c = static_cast<double>(i) * p[i];
            next[i - 1] += c;
            next[i + 1] -= c;
        }
        p = std::move(next);
    }
    const double tz = std::tanh(z);
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * tz + *it;
    return acc;
}
}  // namespace

double ShockSolution::operator()(double x, double t) const
{
    if (b == 0.0)
        return a;
    if (!(nu > 0.0))
        throw InvalidParameter("shock solution needs nu > 0");
    return a - b * std::tanh(b * (x - a * t - x0) / (2.0 * nu));
}

double ShockSolution::derivative(int jx, int jt, double x, double t) const
{
    if (jx < 0 || jt < 0)
        throw InvalidParameter("derivative orders must be non-negative");
    if (jx + jt == 0)
        return (*this)(x, t);
    if (b == 0.0)
        return 0.0;
    if (!(nu > 0.0))
        throw InvalidParameter("shock solution needs nu > 0");
    const double k = b / (2.0 * nu);
    const double z = k * (x - a * t - x0);
    const int n = jx + jt;
    return -b * std::pow(k, n) * std::pow(-a, jt) * tanh_derivative(n, z);
}

double WavySolution::operator()(double x, double t) const
{
    if (!(amplitude > 1.0))
        throw InvalidParameter("wavy solution needs A > 1");
    const double k = 2.0 * std::numbers::pi / period;
    const double e = std::exp(-nu * k * k * t);
    return 2.0 * nu * k * e * std::sin(k * x) / (amplitude + e * std::cos(k * x));
}

ScalarField boost_field(ScalarField field, double eps)
{
    if (eps == 0.0)
        return field;
    return [f = std::move(field), eps](double x, double t) { return eps + f(x - eps * t, t); };
}

ProbeDerivatives probe_derivatives(const ScalarField& field, double x, double t, double probe_h)
{
    const double h = probe_h;
    auto fx = [&](int k) { return field(x + k * h, t); };
    auto ft = [&](int k) { return field(x, t + k * h); };

    ProbeDerivatives d{};
    d.u = fx(0);
    d.u_x = (-fx(2) + 8.0 * fx(1) - 8.0 * fx(-1) + fx(-2)) / (12.0 * h);
    d.u_xx = (-fx(2) + 16.0 * fx(1) - 30.0 * d.u + 16.0 * fx(-1) - fx(-2)) / (12.0 * h * h);
    d.u_xxx = (-fx(3) + 8.0 * fx(2) - 13.0 * fx(1) + 13.0 * fx(-1) - 8.0 * fx(-2) + fx(-3))
              / (8.0 * h * h * h);
    d.u_t = (-ft(2) + 8.0 * ft(1) - 8.0 * ft(-1) + ft(-2)) / (12.0 * h);
    return d;
}

double burgers_residual(const ScalarField& field, double nu, double x, double t, double probe_h)
{
    const auto d = probe_derivatives(field, x, t, probe_h);
    return d.u_t + d.u * d.u_x - nu * d.u_xx;
}

double cbkdv_residual(const ScalarField& field, const CbkdvCoefficients& c, double x, double t,
                      double probe_h)
{
    const auto d = probe_derivatives(field, x, t, probe_h);
    return d.u_t + c.alpha * d.u * d.u_x + c.beta * d.u * d.u * d.u_x + c.mu * d.u_xx
           - c.s * d.u_xxx;
}

}  // namespace burgers
