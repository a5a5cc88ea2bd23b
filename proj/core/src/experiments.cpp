#include "burgers/experiments.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/symmetry.hpp"

namespace burgers
{

namespace
{
std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    while (true)
    {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

double parse_number(std::string_view text, std::size_t line, const std::string& key)
{
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ConfigError(line, "'" + key + "' expects a number, got '" + std::string(text) + "'");
    return v;
}

double parse_positive(std::string_view text, std::size_t line, const std::string& key)
{
    const double v = parse_number(text, line, key);
    if (!(v > 0.0))
        throw ConfigError(line, "'" + key + "' must be positive");
    return v;
}

// Keys of the ic.* family keep their case so that ic.a and ic.A differ.
std::string canonical_key(std::string_view raw)
{
    if (raw.size() > 3 && lower(raw.substr(0, 3)) == "ic.")
        return "ic." + std::string(raw.substr(3));
    std::string key = lower(raw);
    if (key == "t")
        key = "t_end";
    return key;
}

const std::set<std::string>& known_keys()
{
    static const std::set<std::string> keys{
        "scheme", "ic",     "ic.a",     "ic.b",  "ic.A",   "x_min",  "length", "n_points",
        "cfl",    "re_h",   "nu",       "t_end", "frames", "omega",  "output", "merged"};
    return keys;
}

OmegaClosure parse_omega(std::string_view v, std::size_t line)
{
    const std::string s = lower(v);
    if (s == "cancel")
        return OmegaClosure::cancel();
    if (s == "zero")
        return OmegaClosure::zero();
    if (s.rfind("custom:", 0) == 0)
        return OmegaClosure::custom(parse_number(trim(v.substr(7)), line, "omega"));
    throw ConfigError(line, "omega must be cancel, zero or custom:<c0>");
}

double max_abs(const std::vector<double>& values)
{
    double m = 0.0;
    for (double v : values)
        m = std::max(m, std::abs(v));
    return m;
}

ShockSolution shock_of(const ExperimentConfig& c)
{
    return {c.shock_a, c.shock_b, c.nu, c.x_min + 0.5 * c.length};
}

void resolve_derived(ExperimentConfig& c, std::optional<double> re_h, std::optional<double> nu,
                     std::size_t re_h_line)
{
    c.h = c.length / static_cast<double>(c.n_points);
    const Grid1D grid = Grid1D::uniform(c.x_min, c.length, c.n_points, c.boundary());
    auto reference_velocity = [&] {
        return max_abs(State::sample(grid, c.exact_solution(), 0.0).values);
    };

    if (nu)
    {
        c.nu = *nu;
        c.ref_velocity = reference_velocity();
    }
    else if (c.ic == InitialCondition::Wavy)
    {
        // The Cole-Hopf profile scales with nu, so a h / nu is fixed by the
        // geometry and Re_h cannot determine nu.
        throw ConfigError(re_h_line, "the wavy initial condition needs 'nu' (its Re_h is fixed by "
                             "ic.A, length and n_points)");
    }
    else
    {
        // a depends on nu through the shock width: iterate a -> nu -> a.
        c.ref_velocity = std::abs(c.shock_a) + std::abs(c.shock_b);
        for (int it = 0; it < 100; ++it)
        {
            c.nu = c.ref_velocity * c.h / *re_h;
            const double next = reference_velocity();
            const bool done = std::abs(next - c.ref_velocity) <= 1e-15 * next;
            c.ref_velocity = next;
            if (done)
                break;
        }
        c.nu = c.ref_velocity * c.h / *re_h;
    }
    if (!(c.ref_velocity > 0.0))
        throw ConfigError(0, "initial data is identically zero, CFL is undefined");

    c.re_h = c.ref_velocity * c.h / c.nu;
    c.tau = c.cfl * c.h / c.ref_velocity;
    c.n_steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(c.t_end / c.tau)));
}
}  // namespace

//---------------------------------------------------------------------------//

Boundary ExperimentConfig::boundary() const
{
    return ic == InitialCondition::Wavy ? Boundary::Periodic : Boundary::DirichletExact;
}

ScalarField ExperimentConfig::exact_solution() const
{
    if (ic == InitialCondition::Wavy)
    {
        const WavySolution w{wavy_amplitude, nu, length};
        const double x0 = x_min;
        return [w, x0](double x, double t) { return w(x - x0, t); };
    }
    return [s = shock_of(*this)](double x, double t) { return s(x, t); };
}

double ExperimentConfig::omega_tau() const
{
    if (omega.rule == OmegaClosure::Rule::Zero)
        return 0.0;
    return 0.5 * cfl * cfl;
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig c;
    std::map<std::string, std::size_t> seen;
    std::optional<double> re_h, nu;

    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0)
    {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
        {
            if (text.empty())
                break;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, "expected 'key = value'");
        const std::string key = canonical_key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!known_keys().count(key))
            throw ConfigError(line_no, "unknown key '" + std::string(trim(line.substr(0, eq))) + "'");
        if (seen.count(key))
            throw ConfigError(line_no, "duplicate key '" + key + "'");
        seen[key] = line_no;
        if (value.empty())
            throw ConfigError(line_no, "'" + key + "' has no value");

        if (key == "scheme")
        {
            for (std::string_view name : split_list(value))
            {
                try
                {
                    c.schemes.push_back(parse_scheme(lower(name)));
                }
                catch (const InvalidParameter& e)
                {
                    throw ConfigError(line_no, e.what());
                }
            }
        }
        else if (key == "ic")
        {
            const std::string v = lower(value);
            if (v == "shock")
                c.ic = InitialCondition::Shock;
            else if (v == "wavy")
                c.ic = InitialCondition::Wavy;
            else
                throw ConfigError(line_no, "ic must be shock or wavy");
        }
        else if (key == "ic.a")
            c.shock_a = parse_number(value, line_no, key);
        else if (key == "ic.b")
            c.shock_b = parse_positive(value, line_no, key);
        else if (key == "ic.A")
        {
            c.wavy_amplitude = parse_number(value, line_no, key);
            if (!(c.wavy_amplitude > 1.0))
                throw ConfigError(line_no, "ic.A must exceed 1");
        }
        else if (key == "x_min")
            c.x_min = parse_number(value, line_no, key);
        else if (key == "length")
            c.length = parse_positive(value, line_no, key);
        else if (key == "n_points")
        {
            const double n = parse_positive(value, line_no, key);
            if (n != std::floor(n) || n > 1e9)
                throw ConfigError(line_no, "n_points must be an integer");
            if (n < static_cast<double>(Grid1D::min_points))
                throw ConfigError(line_no, "n_points must be at least "
                                               + std::to_string(Grid1D::min_points));
            c.n_points = static_cast<std::size_t>(n);
        }
        else if (key == "cfl")
            c.cfl = parse_positive(value, line_no, key);
        else if (key == "re_h")
            re_h = parse_positive(value, line_no, key);
        else if (key == "nu")
            nu = parse_positive(value, line_no, key);
        else if (key == "t_end")
            c.t_end = parse_positive(value, line_no, key);
        else if (key == "frames")
        {
            c.frames.clear();
            for (std::string_view f : split_list(value))
                c.frames.push_back(parse_number(f, line_no, key));
        }
        else if (key == "omega")
            c.omega = parse_omega(value, line_no);
        else if (key == "output")
            c.output = std::string(value);
        else if (key == "merged")
        {
            const std::string v = lower(value);
            if (v != "true" && v != "false")
                throw ConfigError(line_no, "merged must be true or false");
            c.merged = v == "true";
        }
    }

    for (const char* required : {"scheme", "ic", "n_points", "cfl", "t_end"})
        if (!seen.count(required))
            throw ConfigError(0, std::string("missing required key '") + required + "'");
    if (re_h && nu)
        throw ConfigError(seen.at("nu"), "set exactly one of 're_h' and 'nu'");
    if (!re_h && !nu)
        throw ConfigError(0, "missing required key 're_h' (or 'nu')");

    resolve_derived(c, re_h, nu, re_h ? seen.at("re_h") : 0);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(0, "cannot read config '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

//---------------------------------------------------------------------------//

double ErrorSeries::final_error() const
{
    if (blowup_step || rows.empty())
        return std::numeric_limits<double>::infinity();
    return rows.back().second;
}

double ErrorSeries::max_error() const
{
    double m = 0.0;
    for (const auto& row : rows)
        m = std::max(m, row.second);
    return blowup_step ? std::numeric_limits<double>::infinity() : m;
}

const ErrorSeries& ExperimentResult::find(SchemeId scheme, std::size_t frame_index) const
{
    for (const ErrorSeries& s : series)
        if (s.scheme == scheme && s.frame_index == frame_index)
            return s;
    throw InvalidParameter("no series for scheme " + std::string(short_name(scheme)) + " in frame F"
                           + std::to_string(frame_index + 1));
}

ExperimentResult run_frame_experiment(const ExperimentConfig& config)
{
    if (config.schemes.empty() || config.frames.empty())
        throw InvalidParameter("experiment needs at least one scheme and one frame");

    const SchemeParams params = config.params();
    const ScalarField exact = config.exact_solution();
    const Grid1D mesh = Grid1D::uniform(config.x_min, config.length, config.n_points,
                                        config.boundary());
    const State rest = State::sample(mesh, exact, 0.0);

    ExperimentResult result;
    for (std::size_t f = 0; f < config.frames.size(); ++f)
    {
        FrameMetadata meta{f, config.frames[f], params.cfl(), params.re_h(), {}};
        for (SchemeId id : config.schemes)
            meta.stability[id] = check_conditions(id, params, config.omega_tau());
        result.frames.push_back(std::move(meta));
    }

    for (SchemeId id : config.schemes)
    {
        SchemeConfig scheme;
        scheme.id = id;
        scheme.omega = config.omega;
        for (std::size_t f = 0; f < config.frames.size(); ++f)
        {
            const double eps = config.frames[f];
            const ScalarField reference = boost_field(exact, eps);
            State initial = frame_change(rest, eps);
            if (config.boundary() == Boundary::DirichletExact)
                initial.grid = initial.grid.with_boundary_data(reference);

            ErrorSeries series{f, eps, id, {}, std::nullopt};
            series.rows.reserve(config.n_steps);
            const Observer record = [&](const State& state, std::size_t) {
                series.rows.emplace_back(state.time, l2_error(state, reference));
            };
            const RunResult run_result =
                run(scheme, initial, params, config.n_steps, std::span(&record, 1));
            series.blowup_step = run_result.blowup_step;
            result.series.push_back(std::move(series));
        }
    }
    return result;
}

double cross_frame_spread(const ExperimentResult& result, SchemeId scheme)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool any = false;
    for (const ErrorSeries& s : result.series)
    {
        if (s.scheme != scheme)
            continue;
        any = true;
        const double e = s.final_error();
        if (!std::isfinite(e))
            return std::numeric_limits<double>::infinity();
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    if (!any)
        throw InvalidParameter("no series for scheme " + std::string(short_name(scheme)));
    return hi / lo;
}

ConvergenceStudy convergence_study(const SchemeConfig& scheme, const ShockSolution& exact,
                                   double x_min, double length,
                                   std::span<const std::size_t> n_points,
                                   const std::function<double(double)>& tau_of_h, double t_end)
{
    if (n_points.size() < 3)
        throw InvalidParameter("convergence study needs at least three meshes");
    if (!(t_end > 0.0))
        throw InvalidParameter("convergence study needs t_end > 0");

    const ScalarField field = [exact](double x, double t) { return exact(x, t); };
    ConvergenceStudy study;
    for (std::size_t n : n_points)
    {
        const Grid1D grid = Grid1D::uniform(x_min, length, n, Boundary::DirichletExact)
                                .with_boundary_data(field);
        const double h = grid.h();
        const auto steps = static_cast<std::size_t>(std::ceil(t_end / tau_of_h(h) - 1e-9));
        const SchemeParams params{exact.nu, h, t_end / static_cast<double>(steps),
                                  std::abs(exact.a) + std::abs(exact.b)};
        const RunResult r = run(scheme, State::sample(grid, field, 0.0), params, steps);
        const double err = r.blowup_step ? std::numeric_limits<double>::infinity()
                                         : l2_error(r.final_state, field);
        study.levels.push_back({n, h, params.tau, err});
    }

    std::vector<double> hs, taus, errs;
    for (const ConvergenceLevel& l : study.levels)
    {
        hs.push_back(l.h);
        taus.push_back(l.tau);
        errs.push_back(l.error);
    }
    const bool finite = std::all_of(errs.begin(), errs.end(), [](double e) { return std::isfinite(e); });
    study.slope_h = finite ? log_log_slope(hs, errs) : std::numeric_limits<double>::quiet_NaN();
    study.slope_tau = finite ? log_log_slope(taus, errs) : std::numeric_limits<double>::quiet_NaN();
    return study;
}

//---------------------------------------------------------------------------//

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::map<std::string, std::string> render_csv(const std::vector<ErrorSeries>& series,
                                              const std::string& output, bool merged)
{
    if (series.empty())
        throw InvalidParameter("nothing to write: series list is empty");

    std::map<std::string, std::string> files;
    if (!merged)
    {
        for (const ErrorSeries& s : series)
        {
            std::string body = "t,err\n";
            for (const auto& [t, err] : s.rows)
                body += format_double(t) + "," + format_double(err) + "\n";
            if (s.blowup_step)
                body += "# blowup_step=" + std::to_string(*s.blowup_step) + "\n";
            files[output + "_" + std::string(short_name(s.scheme)) + "_F"
                  + std::to_string(s.frame_index + 1) + ".csv"] = std::move(body);
        }
        return files;
    }

    std::vector<SchemeId> order;
    for (const ErrorSeries& s : series)
        if (std::find(order.begin(), order.end(), s.scheme) == order.end())
            order.push_back(s.scheme);

    for (SchemeId id : order)
    {
        std::vector<const ErrorSeries*> group;
        for (const ErrorSeries& s : series)
            if (s.scheme == id)
                group.push_back(&s);
        std::sort(group.begin(), group.end(), [](const ErrorSeries* a, const ErrorSeries* b) {
            return a->frame_index < b->frame_index;
        });

        std::string body = "t";
        std::size_t rows = 0;
        for (const ErrorSeries* s : group)
        {
            body += ",err_F" + std::to_string(s->frame_index + 1);
            rows = std::max(rows, s->rows.size());
        }
        body += "\n";
        for (std::size_t r = 0; r < rows; ++r)
        {
            for (const ErrorSeries* s : group)
                if (r < s->rows.size())
                {
                    body += format_double(s->rows[r].first);
                    break;
                }
            for (const ErrorSeries* s : group)
                body += "," + (r < s->rows.size() ? format_double(s->rows[r].second) : "");
            body += "\n";
        }
        for (const ErrorSeries* s : group)
            if (s->blowup_step)
                body += "# blowup_step[F" + std::to_string(s->frame_index + 1)
                        + "]=" + std::to_string(*s->blowup_step) + "\n";
        files[output + "_" + std::string(short_name(id)) + ".csv"] = std::move(body);
    }
    return files;
}

std::vector<std::filesystem::path> write_csv(const std::vector<ErrorSeries>& series,
                                             const std::string& output, bool merged)
{
    std::vector<std::filesystem::path> written;
    for (const auto& [name, body] : render_csv(series, output, merged))
    {
        const std::filesystem::path path(name);
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out << body;
        if (!out.flush())
            throw std::runtime_error("failed writing '" + path.string() + "'");
        written.push_back(path);
    }
    return written;
}

}  // namespace burgers
