#include "burgers/jet.hpp"

#include <algorithm>

#include "burgers/errors.hpp"

namespace burgers
{

namespace
{
double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::vector<int> common_shape(const Series& a, const Series& b)
{
    const int levels = std::min(a.levels(), b.levels());
    std::vector<int> s(static_cast<std::size_t>(levels));
    for (int k = 0; k < levels; ++k)
        s[static_cast<std::size_t>(k)] = std::min(a.x_order(k), b.x_order(k));
    return s;
}
}  // namespace

Series::Series(std::vector<int> x_orders)
{
    int cap = x_orders.empty() ? -1 : x_orders.front();
    for (int order : x_orders)
    {
        cap = std::min(cap, order);
        if (cap < 0)
            break;
        c_.emplace_back(static_cast<std::size_t>(cap) + 1);
    }
}

Series Series::constant(const Dual& c, const std::vector<int>& x_orders)
{
    Series s(x_orders);
    if (!s.empty())
        s.coeff(0, 0) = c;
    return s;
}

std::vector<int> Series::shape() const
{
    std::vector<int> s(c_.size());
    for (int k = 0; k < levels(); ++k)
        s[static_cast<std::size_t>(k)] = x_order(k);
    return s;
}

Dual Series::derivative(int j, int k) const
{
    if (!has(j, k))
        throw InsufficientJetOrder("jet coordinate u_(" + std::to_string(j) + "," + std::to_string(k)
                                   + ") is not available");
    return coeff(j, k) * Dual(factorial(j) * factorial(k));
}

Dual Series::value() const
{
    if (empty())
        throw InsufficientJetOrder("expression needs jet coordinates beyond the supplied order");
    return c_[0][0];
}

Series Series::dx() const
{
    std::vector<int> s = shape();
    for (int& o : s)
        --o;
    Series r(s);
    for (int k = 0; k < r.levels(); ++k)
        for (int j = 0; j <= r.x_order(k); ++j)
            r.coeff(j, k) = coeff(j + 1, k) * Dual(j + 1.0);
    return r;
}

Series Series::dt() const
{
    std::vector<int> s = shape();
    if (!s.empty())
        s.erase(s.begin());
    Series r(s);
    for (int k = 0; k < r.levels(); ++k)
        for (int j = 0; j <= r.x_order(k); ++j)
            r.coeff(j, k) = coeff(j, k + 1) * Dual(k + 1.0);
    return r;
}

Series& Series::operator+=(const Series& o)
{
    Series r(common_shape(*this, o));
    for (int k = 0; k < r.levels(); ++k)
        for (int j = 0; j <= r.x_order(k); ++j)
            r.coeff(j, k) = coeff(j, k) + o.coeff(j, k);
    return *this = std::move(r);
}

Series& Series::operator-=(const Series& o)
{
    Series r(common_shape(*this, o));
    for (int k = 0; k < r.levels(); ++k)
        for (int j = 0; j <= r.x_order(k); ++j)
            r.coeff(j, k) = coeff(j, k) - o.coeff(j, k);
    return *this = std::move(r);
}

Series& Series::operator*=(const Dual& s)
{
    for (auto& level : c_)
        for (auto& c : level)
            c *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    Series r(common_shape(a, b));
    for (int k = 0; k < r.levels(); ++k)
        for (int j = 0; j <= r.x_order(k); ++j)
        {
            Dual acc;
            for (int k1 = 0; k1 <= k; ++k1)
                for (int j1 = 0; j1 <= j; ++j1)
                    acc += a.coeff(j1, k1) * b.coeff(j - j1, k - k1);
            r.coeff(j, k) = acc;
        }
    return r;
}

Series operator+(Series a, const Dual& s)
{
    if (!a.empty())
        a.coeff(0, 0) += s;
    return a;
}

Series abs(const Series& a)
{
    return a.value().v < 0.0 ? -a : a;
}

Series dx(const Series& a, int times)
{
    Series r = a;
    for (int i = 0; i < times; ++i)
        r = r.dx();
    return r;
}

//---------------------------------------------------------------------------//

JetPoint::JetPoint(std::vector<int> x_orders) : series_(std::move(x_orders)) {}

double JetPoint::u(int j, int k) const
{
    return series_.derivative(j, k).v;
}

void JetPoint::set_u(int j, int k, double value)
{
    if (!series_.has(j, k))
        throw InsufficientJetOrder("jet has no slot for u_(" + std::to_string(j) + ","
                                   + std::to_string(k) + ")");
    series_.coeff(j, k) = Dual(value / (factorial(j) * factorial(k)));
}

JetPoint JetPoint::from_series(const Series& u, double x, double t)
{
    JetPoint p;
    p.series_ = u;
    for (int k = 0; k < u.levels(); ++k)
        for (int j = 0; j <= u.x_order(k); ++j)
            p.series_.coeff(j, k).d = 0.0;
    p.x = x;
    p.t = t;
    return p;
}

Dual JetContext::h() const
{
    if (!h_coord)
        throw InvalidParameter("jet has no h coordinate");
    return *h_coord;
}

Dual JetContext::tau() const
{
    if (!tau_coord)
        throw InvalidParameter("jet has no tau coordinate");
    return *tau_coord;
}

Dual JetContext::nu() const
{
    if (!nu_coord)
        throw InvalidParameter("jet has no nu coordinate");
    return *nu_coord;
}

JetContext JetContext::from_jet(const JetPoint& jet)
{
    JetContext ctx;
    ctx.u = jet.series();
    const auto shape = ctx.u.shape();
    ctx.x = Series::constant(Dual(jet.x), shape);
    if (ctx.x.has(1, 0))
        ctx.x.coeff(1, 0) = Dual(1.0);
    ctx.t = Series::constant(Dual(jet.t), shape);
    if (ctx.t.has(0, 1))
        ctx.t.coeff(0, 1) = Dual(1.0);
    if (jet.h)
        ctx.h_coord = Dual(*jet.h);
    if (jet.tau)
        ctx.tau_coord = Dual(*jet.tau);
    if (jet.nu)
        ctx.nu_coord = Dual(*jet.nu);
    return ctx;
}

double total_derivative(const JetExpr& expr, const JetPoint& jet, Direction direction)
{
    const Series s = expr(JetContext::from_jet(jet));
    return (direction == Direction::X ? s.dx() : s.dt()).value().v;
}

JetPoint constrain_to_equation(const EvolutionEquation& eq, const JetPoint& free_jet,
                               int t_levels)
{
    const Series& free = free_jet.series();
    if (free.empty())
        throw InsufficientJetOrder("free jet is empty");

    // Start from level 0 only; higher levels are derived.
    Series u(std::vector<int>{free.x_order(0)});
    for (int j = 0; j <= free.x_order(0); ++j)
        u.coeff(j, 0) = Dual(free.coeff(j, 0).v);

    JetPoint current = JetPoint::from_series(u, free_jet.x, free_jet.t);
    current.h = free_jet.h;
    current.tau = free_jet.tau;
    current.nu = free_jet.nu;

    for (int k = 0; k < t_levels; ++k)
    {
        const Series g = eq.rhs(JetContext::from_jet(current));
        if (g.levels() <= k)
            break;
        std::vector<int> shape = u.shape();
        shape.push_back(g.x_order(k));
        Series next(shape);
        for (int kk = 0; kk < next.levels(); ++kk)
            for (int j = 0; j <= next.x_order(kk); ++j)
                next.coeff(j, kk) = kk <= k ? u.coeff(j, kk) : g.coeff(j, k) * Dual(1.0 / (k + 1));
        u = std::move(next);
        JetPoint updated = JetPoint::from_series(u, free_jet.x, free_jet.t);
        updated.h = free_jet.h;
        updated.tau = free_jet.tau;
        updated.nu = free_jet.nu;
        current = std::move(updated);
    }
    return current;
}

}  // namespace burgers
