#include "burgers/tridiagonal.hpp"

#include "burgers/errors.hpp"

namespace burgers
{

namespace
{
// Thomas sweep with an explicit diagonal so the cyclic solver can modify the
// first and last entries.
void thomas(double lower, std::span<const double> diag, double upper, std::span<const double> rhs,
            std::span<double> x)
{
    const std::size_t n = x.size();
    std::vector<double> c_prime(n);
    c_prime[0] = upper / diag[0];
    x[0] = rhs[0] / diag[0];

    // Forward sweep
    for (std::size_t i = 1; i < n; ++i)
    {
        const double factor = 1.0 / (diag[i] - lower * c_prime[i - 1]);
        c_prime[i] = upper * factor;
        x[i] = (rhs[i] - lower * x[i - 1]) * factor;
    }

    // Back substitution
    for (std::size_t ip = n - 1; ip > 0; --ip)
        x[ip - 1] -= c_prime[ip - 1] * x[ip];
}
}  // namespace

void solve_tridiagonal(const TridiagonalCoeffs& a, std::span<const double> rhs,
                       std::span<double> x)
{
    if (rhs.size() != x.size() || x.size() < 2)
        throw InvalidParameter("tridiagonal solve needs matching sizes >= 2");
    const std::vector<double> diag(x.size(), a.diag);
    thomas(a.lower, diag, a.upper, rhs, x);
}

void solve_cyclic_tridiagonal(const TridiagonalCoeffs& a, std::span<const double> rhs,
                              std::span<double> x)
{
    const std::size_t n = x.size();
    if (rhs.size() != n || n < 3)
        throw InvalidParameter("cyclic tridiagonal solve needs matching sizes >= 3");

    // A = B + w v^T with w = (gamma, 0, ..., 0, upper), v = (1, 0, ..., 0, lower/gamma)
    const double gamma = -a.diag;
    std::vector<double> diag(n, a.diag);
    diag[0] -= gamma;
    diag[n - 1] -= a.lower * a.upper / gamma;

    std::vector<double> y(n);
    thomas(a.lower, diag, a.upper, rhs, y);

    std::vector<double> w(n, 0.0);
    w[0] = gamma;
    w[n - 1] = a.upper;
    std::vector<double> z(n);
    thomas(a.lower, diag, a.upper, w, z);

    const double num = y[0] + a.lower * y[n - 1] / gamma;
    const double den = 1.0 + z[0] + a.lower * z[n - 1] / gamma;
    const double factor = num / den;
    for (std::size_t i = 0; i < n; ++i)
        x[i] = y[i] - factor * z[i];
}

}  // namespace burgers
