#include "burgers/symmetry.hpp"

#include <array>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"

namespace burgers
{

namespace
{
Series lit(double c, const Series& like)
{
    return Series::constant(Dual(c), like.shape());
}

Series zero_like(const Series& like)
{
    return Series(like.shape());
}

void require_positive(double eps, const char* what)
{
    if (!(eps > 0.0))
        throw DomainError(std::string(what) + " needs a positive dilatation factor");
}

GroupGenerator make(GeneratorId id)
{
    GroupGenerator g;
    g.id = id;
    auto zero = [](const Series& x, const Series&, const Series&) { return zero_like(x); };
    g.xi_x = zero;
    g.xi_t = zero;
    g.eta = zero;

    switch (id)
    {
    case GeneratorId::L1:
        g.name = "L1 (space translation)";
        g.xi_x = [](const Series& x, const Series&, const Series&) { return lit(1.0, x); };
        g.finite = [](const PointCoords& p, double e) {
            PointCoords q = p;
            q.x += e;
            return q;
        };
        break;
    case GeneratorId::L2:
        g.name = "L2 (time translation)";
        g.xi_t = [](const Series& x, const Series&, const Series&) { return lit(1.0, x); };
        g.finite = [](const PointCoords& p, double e) {
            PointCoords q = p;
            q.t += e;
            return q;
        };
        break;
    case GeneratorId::L3:
    case GeneratorId::L3p:
        g.name = id == GeneratorId::L3 ? "L3 (dilatation)" : "L'3 (dilatation with steps)";
        g.parameterization = Parameterization::Multiplicative;
        g.xi_x = [](const Series& x, const Series&, const Series&) { return x; };
        g.xi_t = [](const Series&, const Series& t, const Series&) { return 2.0 * t; };
        g.eta = [](const Series&, const Series&, const Series& u) { return -u; };
        if (id == GeneratorId::L3p)
        {
            g.zeta_h = [](double h) { return h; };
            g.zeta_tau = [](double tau) { return 2.0 * tau; };
        }
        g.finite = [with_steps = id == GeneratorId::L3p](const PointCoords& p, double e) {
            require_positive(e, "L3");
            PointCoords q = p;
            q.x = e * p.x;
            q.t = e * e * p.t;
            q.u = p.u / e;
            if (with_steps)
            {
                q.h = e * p.h;
                q.tau = e * e * p.tau;
            }
            return q;
        };
        break;
    case GeneratorId::L4:
        g.name = "L4 (projective)";
        g.xi_x = [](const Series& x, const Series& t, const Series&) { return x * t; };
        g.xi_t = [](const Series&, const Series& t, const Series&) { return t * t; };
        g.eta = [](const Series& x, const Series& t, const Series& u) { return x - u * t; };
        g.finite = [](const PointCoords& p, double e) {
            const double d = 1.0 - e * p.t;
            if (d == 0.0 || !std::isfinite(1.0 / d))
                throw DomainError("projective transformation is singular at 1 - eps t = 0");
            PointCoords q = p;
            q.x = p.x / d;
            q.t = p.t / d;
            q.u = e * p.x + p.u * d;
            return q;
        };
        break;
    case GeneratorId::L5:
        g.name = "L5 (Galilean boost)";
        g.xi_x = [](const Series&, const Series& t, const Series&) { return t; };
        g.eta = [](const Series& x, const Series&, const Series&) { return lit(1.0, x); };
        g.finite = [](const PointCoords& p, double e) {
            PointCoords q = p;
            q.x = p.x + e * p.t;
            q.u = p.u + e;
            return q;
        };
        break;
    case GeneratorId::L6:
    case GeneratorId::L4p:
        g.name = id == GeneratorId::L6 ? "L6 (dilatation with viscosity)"
                                       : "L'4 (dilatation with viscosity and steps)";
        g.parameterization = Parameterization::Multiplicative;
        g.xi_t = [](const Series&, const Series& t, const Series&) { return -t; };
        g.eta = [](const Series&, const Series&, const Series& u) { return u; };
        g.theta_nu = [](double nu) { return nu; };
        if (id == GeneratorId::L4p)
            g.zeta_tau = [](double tau) { return -tau; };
        g.finite = [with_steps = id == GeneratorId::L4p](const PointCoords& p, double e) {
            require_positive(e, "L6");
            PointCoords q = p;
            q.t = p.t / e;
            q.u = e * p.u;
            q.nu = e * p.nu;
            if (with_steps)
                q.tau = p.tau / e;
            return q;
        };
        break;
    }
    return g;
}

double eval(const GroupGenerator::Infinitesimal& f, const PointCoords& p)
{
    const std::vector<int> shape{0};
    return f(Series::constant(Dual(p.x), shape), Series::constant(Dual(p.t), shape),
             Series::constant(Dual(p.u), shape))
        .real();
}

double eval(const GroupGenerator::StepInfinitesimal& f, double v)
{
    return f ? f(v) : 0.0;
}

PointCoords axpy(const PointCoords& p, double a, const PointCoords& d)
{
    return {p.x + a * d.x, p.t + a * d.t, p.u + a * d.u,
            p.h + a * d.h, p.tau + a * d.tau, p.nu + a * d.nu};
}

bool finite_point(const PointCoords& p)
{
    return std::isfinite(p.x) && std::isfinite(p.t) && std::isfinite(p.u) && std::isfinite(p.h)
           && std::isfinite(p.tau) && std::isfinite(p.nu);
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// U differentiated j times in x and k times in t.
Series u_derivative(const Series& u, int j, int k)
{
    Series r = u;
    for (int i = 0; i < j; ++i)
        r = r.dx();
    for (int i = 0; i < k; ++i)
        r = r.dt();
    return r;
}

struct ProlongationSeries
{
    Series xi_x, xi_t;
    std::map<std::pair<int, int>, Series> sigma;  // (0,0) holds eta
};

// sigma^{J+k} = D_k sigma^J - u_{J+x} D_k xi_1 - u_{J+t} D_k xi_2
Series next_sigma(const ProlongationSeries& ps, const Series& u, std::pair<int, int> parent,
                  Direction dir)
{
    auto d = [dir](const Series& s) { return dir == Direction::X ? s.dx() : s.dt(); };
    const auto [j, k] = parent;
    return d(ps.sigma.at(parent)) - u_derivative(u, j + 1, k) * d(ps.xi_x)
           - u_derivative(u, j, k + 1) * d(ps.xi_t);
}

ProlongationSeries prolong_series(const GroupGenerator& gen, const JetContext& ctx, int order,
                                  bool t_only_first = false)
{
    ProlongationSeries ps;
    ps.xi_x = gen.xi_x(ctx.x, ctx.t, ctx.u);
    ps.xi_t = gen.xi_t(ctx.x, ctx.t, ctx.u);
    ps.sigma[{0, 0}] = gen.eta(ctx.x, ctx.t, ctx.u);
    for (int o = 1; o <= order; ++o)
        for (int k = 0; k <= o; ++k)
        {
            const int j = o - k;
            if (t_only_first && k > (j == 0 ? 1 : 0))
                continue;
            if (j > 0)
                ps.sigma[{j, k}] = next_sigma(ps, ctx.u, {j - 1, k}, Direction::X);
            else
                ps.sigma[{0, k}] = next_sigma(ps, ctx.u, {0, k - 1}, Direction::T);
        }
    return ps;
}

InvarianceResidual apply_prolonged(const GroupGenerator& gen, const EvolutionEquation& eq,
                                   const JetPoint& jet)
{
    const int p = eq.x_order;
    const JetContext full = JetContext::from_jet(jet);
    // sigma for u_{j,0}, j <= p, and u_{0,1}: the coordinates F actually reads.
    const ProlongationSeries ps = prolong_series(gen, full, p, /*t_only_first=*/true);

    // F evaluated on the truncated jet {u_{j,0}, j <= p; u_{0,1}}.
    const std::vector<int> shape{p, 0};
    JetContext base;
    base.u = Series(shape);
    for (int j = 0; j <= p; ++j)
        base.u.coeff(j, 0) = Dual(jet.series().coeff(j, 0).v);
    base.u.coeff(0, 1) = Dual(jet.series().coeff(0, 1).v);
    base.x = Series::constant(Dual(jet.x), shape);
    base.x.coeff(1, 0) = Dual(1.0);
    base.t = Series::constant(Dual(jet.t), shape);
    base.t.coeff(0, 1) = Dual(1.0);
    if (jet.h)
        base.h_coord = Dual(*jet.h);
    if (jet.tau)
        base.tau_coord = Dual(*jet.tau);
    if (jet.nu)
        base.nu_coord = Dual(*jet.nu);

    InvarianceResidual out;
    auto accumulate = [&](const JetContext& seeded) {
        const double c = eq.lhs(seeded).value().d;
        out.residual += c;
        out.scale += std::abs(c);
    };

    if (const double v = ps.xi_x.real(); v != 0.0)
    {
        JetContext c = base;
        c.x.coeff(0, 0).d = v;
        accumulate(c);
    }
    if (const double v = ps.xi_t.real(); v != 0.0)
    {
        JetContext c = base;
        c.t.coeff(0, 0).d = v;
        accumulate(c);
    }
    for (const auto& [index, series] : ps.sigma)
    {
        const auto [j, k] = index;
        const double v = series.real();
        if (v == 0.0)
            continue;
        JetContext c = base;
        c.u.coeff(j, k).d = v / (factorial(j) * factorial(k));
        accumulate(c);
    }
    if (jet.h && gen.zeta_h)
    {
        JetContext c = base;
        c.h_coord->d = gen.zeta_h(*jet.h);
        accumulate(c);
    }
    if (jet.tau && gen.zeta_tau)
    {
        JetContext c = base;
        c.tau_coord->d = gen.zeta_tau(*jet.tau);
        accumulate(c);
    }
    if (jet.nu && gen.theta_nu)
    {
        JetContext c = base;
        c.nu_coord->d = gen.theta_nu(*jet.nu);
        accumulate(c);
    }
    return out;
}
}  // namespace

//---------------------------------------------------------------------------//

double GroupGenerator::inverse_parameter(double eps) const
{
    return parameterization == Parameterization::Additive ? -eps : 1.0 / eps;
}

double GroupGenerator::compose_parameters(double a, double b) const
{
    return parameterization == Parameterization::Additive ? a + b : a * b;
}

PointCoords GroupGenerator::infinitesimals(const PointCoords& p) const
{
    return {eval(xi_x, p), eval(xi_t, p), eval(eta, p),
            eval(zeta_h, p.h), eval(zeta_tau, p.tau), eval(theta_nu, p.nu)};
}

GroupGenerator generator(GeneratorId id)
{
    return make(id);
}

GroupGenerator burgers_generator(int index)
{
    static constexpr std::array ids{GeneratorId::L1, GeneratorId::L2, GeneratorId::L3,
                                    GeneratorId::L4, GeneratorId::L5, GeneratorId::L6};
    if (index < 1 || index > 6)
        throw InvalidParameter("Burgers generators are numbered 1..6");
    return make(ids[static_cast<std::size_t>(index - 1)]);
}

std::vector<GroupGenerator> burgers_generators()
{
    std::vector<GroupGenerator> out;
    for (int i = 1; i <= 6; ++i)
        out.push_back(burgers_generator(i));
    return out;
}

std::vector<GroupGenerator> differential_approximation_generators()
{
    return {make(GeneratorId::L1), make(GeneratorId::L2), make(GeneratorId::L3p),
            make(GeneratorId::L4p)};
}

PointCoords finite_transform(const GroupGenerator& gen, double eps, const PointCoords& point)
{
    return gen.finite(point, eps);
}

PointCoords integrate_generator_flow(const GroupGenerator& gen, double eps,
                                     const PointCoords& point, int ode_steps)
{
    if (ode_steps < 16)
        throw InvalidParameter("generator flow integration needs at least 16 steps");
    double s_end = eps;
    if (gen.parameterization == Parameterization::Multiplicative)
    {
        require_positive(eps, gen.name.c_str());
        s_end = std::log(eps);
    }
    const double ds = s_end / ode_steps;
    PointCoords p = point;
    for (int i = 0; i < ode_steps; ++i)
    {
        const PointCoords k1 = gen.infinitesimals(p);
        const PointCoords k2 = gen.infinitesimals(axpy(p, 0.5 * ds, k1));
        const PointCoords k3 = gen.infinitesimals(axpy(p, 0.5 * ds, k2));
        const PointCoords k4 = gen.infinitesimals(axpy(p, ds, k3));
        p = axpy(p, ds / 6.0, k1);
        p = axpy(p, ds / 3.0, k2);
        p = axpy(p, ds / 3.0, k3);
        p = axpy(p, ds / 6.0, k4);
        if (!finite_point(p))
            throw DomainError("generator flow left its validity domain");
    }
    return p;
}

Prolongation prolong_coefficients(const GroupGenerator& gen, const JetPoint& jet, int order)
{
    if (order < 1)
        throw InvalidParameter("prolongation order must be >= 1");
    const ProlongationSeries ps = prolong_series(gen, JetContext::from_jet(jet), order);
    Prolongation out;
    for (const auto& [index, series] : ps.sigma)
        if (index != std::pair{0, 0})
            out[index] = series.real();
    return out;
}

InvarianceResidual pde_invariance_residual(const GroupGenerator& gen,
                                           const EvolutionEquation& equation,
                                           const JetPoint& constrained_jet)
{
    return apply_prolonged(gen, equation, constrained_jet);
}

InvarianceResidual da_invariance_residual(const GroupGenerator& gen,
                                          const EvolutionEquation& approximation,
                                          const JetPoint& constrained_jet)
{
    if (!constrained_jet.h || !constrained_jet.tau)
        throw InvalidParameter("differential approximation jets need h and tau coordinates");
    return apply_prolonged(gen, approximation, constrained_jet);
}

EvolutionEquation burgers_equation()
{
    return {"burgers",
            [](const JetContext& c) {
                const Series ux = c.u.dx();
                return c.nu() * ux.dx() - c.u * ux;
            },
            2};
}

EvolutionEquation cbkdv_equation(const CbkdvCoefficients& k)
{
    return {"cbkdv",
            [k](const JetContext& c) {
                const Series ux = c.u.dx();
                const Series uxx = ux.dx();
                return -(k.alpha * (c.u * ux) + k.beta * (c.u * c.u * ux) + k.mu * uxx
                         - k.s * uxx.dx());
            },
            3};
}

JetPoint sample_constrained_jet(const EvolutionEquation& eq, std::mt19937_64& rng,
                                const JetSampling& sampling)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> visc(sampling.nu_min, sampling.nu_max);
    std::uniform_real_distribution<double> steps(sampling.step_min, sampling.step_max);

    JetPoint free(std::vector<int>{sampling.free_order});
    free.x = unit(rng);
    free.t = unit(rng);
    for (int j = 0; j <= sampling.free_order; ++j)
        free.set_u(j, 0, unit(rng));
    free.nu = visc(rng);
    if (sampling.with_steps)
    {
        free.h = steps(rng);
        free.tau = steps(rng);
    }
    return constrain_to_equation(eq, free, sampling.t_levels);
}

TransformedField transform_solution(const GroupGenerator& gen, double eps, ScalarField field,
                                    double nu)
{
    const double inverse = gen.inverse_parameter(eps);
    ScalarField image = [gen, eps, inverse, f = std::move(field), nu](double xs, double ts) {
        // The catalogued maps act on (x, t) independently of u.
        const PointCoords pre = finite_transform(gen, inverse, {xs, ts, 0.0, 0.0, 0.0, nu});
        const PointCoords q = finite_transform(gen, eps, {pre.x, pre.t, f(pre.x, pre.t), 0.0, 0.0, nu});
        return q.u;
    };
    const double nu_image = finite_transform(gen, eps, {0.0, 0.0, 0.0, 0.0, 0.0, nu}).nu;
    return {std::move(image), nu_image};
}

State frame_change(const State& state, double eps)
{
    State out = state;
    for (double& v : out.values)
        v += eps;
    out.grid = state.grid.with_origin_offset(state.grid.origin_offset() + eps * state.time);
    return out;
}

}  // namespace burgers
