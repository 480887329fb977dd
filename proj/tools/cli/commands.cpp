#include "cli/commands.hpp"

#include "cli/generator_spec.hpp"
#include "cli/verification.hpp"

#include <squeeze/errors.hpp>
#include <squeeze/fock_oracle.hpp>
#include <squeeze/gaussian_state.hpp>
#include <squeeze/heisenberg_operator.hpp>
#include <squeeze/symplectic.hpp>

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <vector>

namespace sqz::cli {

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.14e", v);
    return buf.data();
}

namespace {

using Row = std::vector<double>;

void write_table(std::ostream& out, const RunConfig& config, const char* command,
                 const std::vector<std::string>& columns, const std::vector<Row>& rows)
{
    if (config.format == OutputFormat::csv) {
        for (std::size_t k = 0; k < columns.size(); ++k)
            out << (k ? "," : "") << columns[k];
        out << '\n';
        for (const Row& row : rows) {
            for (std::size_t k = 0; k < row.size(); ++k)
                out << (k ? "," : "") << format_number(row[k]);
            out << '\n';
        }
        return;
    }
    nlohmann::json doc{{"command", command}, {"config", to_json(config)}, {"columns", columns}};
    nlohmann::json& jrows = doc["rows"] = nlohmann::json::array();
    for (const Row& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t k = 0; k < row.size(); ++k)
            obj[columns[k]] = row[k];
        jrows.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

SqueezedDisplacedState initial_state(const RunConfig& c)
{
    return SqueezedDisplacedState({c.s0_re, c.s0_im}, {c.d0_re, c.d0_im});
}

Grid config_grid(const RunConfig& c)
{
    return Grid::symmetric(c.grid_l, c.grid_points);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

} // namespace

int cmd_evolve(const RunConfig& config, std::ostream& out)
{
    validate(config);
    const SqueezedDisplacedState state = initial_state(config);
    const Grid grid = config_grid(config);
    const OperatorCoeffs coeffs = coeffs_from_params(state.s0(), state.d0());

    std::vector<Row> rows;
    for (std::size_t k = 0; k <= config.n_steps; ++k) {
        const double t = config.t_start + (config.t_end - config.t_start) * double(k) / double(config.n_steps);
        const EvolvedParams p = evolve(state, t);
        const bool real = state.has_real_parameters();
        const double gamma = real ? density_width(state.s0().real(), t) : p.squeeze.real();
        const double mid = real ? center(state.d0().real(), t) : density_center(state, t);
        const double norm_error = std::abs(norm_squared(wavefunction(state, t, grid)) - 1.0);
        rows.push_back({t, p.squeeze.real(), p.squeeze.imag(), p.displacement.real(), p.displacement.imag(), gamma,
                        mid, phase_delta(coeffs, t), norm_error});
    }
    write_table(out, config, "evolve",
                {"t", "s_re", "s_im", "d_re", "d_im", "gamma", "center", "delta_phase", "norm_error"}, rows);
    return kSuccess;
}

int cmd_wavefunction(const RunConfig& config, std::ostream& out)
{
    validate(config);
    const GridFunction psi = wavefunction(initial_state(config), config.time, config_grid(config));
    std::vector<Row> rows;
    rows.reserve(psi.values.size());
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        const cplx v = psi.values[i];
        rows.push_back({psi.grid.x(i), v.real(), v.imag(), std::norm(v)});
    }
    write_table(out, config, "wavefunction", {"x", "psi_re", "psi_im", "density"}, rows);
    return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    validate(config);
    VerifyOptions options;
    options.grid = config_grid(config);
    options.n_max = config.n_max;
    options.tolerance = config.tolerance;
    options.s0 = {config.s0_re, config.s0_im};
    options.d0 = {config.d0_re, config.d0_im};
    const VerificationReport report = run_verification(options);

    if (config.format == OutputFormat::csv) {
        out << "check,passed,value,threshold,detail\n";
        for (const CheckResult& c : report.checks) {
            out << c.name << ',' << (c.passed ? "true" : "false") << ',' << format_number(c.value) << ','
                << format_number(c.threshold) << ',' << csv_field(c.detail) << '\n';
        }
        out << "overall," << (report.passed() ? "true" : "false") << ",,,"
            << csv_field("max_l2_error=" + format_number(report.max_l2_error) +
                         ",max_phase_error=" + format_number(report.max_phase_error))
            << '\n';
    } else {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks) {
            // inf is not representable in JSON; a failed check with no value reports null
            nlohmann::json value = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
            checks.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"value", value},
                              {"threshold", c.threshold},
                              {"detail", c.detail}});
        }
        auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
        const nlohmann::json doc{{"command", "verify"},
                                 {"config", to_json(config)},
                                 {"passed", report.passed()},
                                 {"max_l2_error", finite_or_null(report.max_l2_error)},
                                 {"max_phase_error", finite_or_null(report.max_phase_error)},
                                 {"checks", checks}};
        out << doc.dump(2) << '\n';
    }
    return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_symplectic(const RunConfig& config, std::ostream& out)
{
    validate(config);
    const SymplecticMatrix m = build_matrix(parse_generator_spec(config.spec));
    const cplx s2 = mobius_squeeze(m, {config.s1_re, config.s1_im});
    const std::vector<std::string> columns{"a", "b", "c", "d", "determinant", "s2_re", "s2_im"};
    write_table(out, config, "symplectic", columns, {{m.a(), m.b(), m.c(), m.d(), m.determinant(), s2.real(), s2.imag()}});
    return kSuccess;
}

namespace {

struct Overrides {
    std::optional<std::string> config_path;
    std::optional<double> s0_re, s0_im, d0_re, d0_im, t_start, t_end, grid_l, tolerance, time, s1_re, s1_im;
    std::optional<std::size_t> n_steps, grid_points, n_max;
    std::optional<std::string> format, spec;
};

void add_common_options(CLI::App& sub, Overrides& o)
{
    sub.add_option("--config", o.config_path, "JSON config file; flags override its values");
    sub.add_option("--s0-re", o.s0_re, "Re S0 (must be > 0)");
    sub.add_option("--s0-im", o.s0_im, "Im S0");
    sub.add_option("--d0-re", o.d0_re, "Re D0");
    sub.add_option("--d0-im", o.d0_im, "Im D0");
    sub.add_option("--t-start", o.t_start, "first time sample");
    sub.add_option("--t-end", o.t_end, "last time sample");
    sub.add_option("--steps", o.n_steps, "number of time steps");
    sub.add_option("--grid-l", o.grid_l, "grid half width L");
    sub.add_option("--grid-n", o.grid_points, "number of grid points");
    sub.add_option("--nmax", o.n_max, "Fock truncation index");
    sub.add_option("--tol", o.tolerance, "verification tolerance");
    sub.add_option("--format", o.format, "csv or json");
}

template <class T>
void apply(const std::optional<T>& flag, T& field)
{
    if (flag)
        field = *flag;
}

RunConfig resolve(const Overrides& o)
{
    RunConfig c;
    if (o.config_path)
        c = load_config_file(*o.config_path, c);
    apply(o.s0_re, c.s0_re);
    apply(o.s0_im, c.s0_im);
    apply(o.d0_re, c.d0_re);
    apply(o.d0_im, c.d0_im);
    apply(o.t_start, c.t_start);
    apply(o.t_end, c.t_end);
    apply(o.n_steps, c.n_steps);
    apply(o.grid_l, c.grid_l);
    apply(o.grid_points, c.grid_points);
    apply(o.n_max, c.n_max);
    apply(o.tolerance, c.tolerance);
    apply(o.time, c.time);
    apply(o.spec, c.spec);
    apply(o.s1_re, c.s1_re);
    apply(o.s1_im, c.s1_im);
    if (o.format)
        c.format = parse_format(*o.format);
    validate(c);
    return c;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Squeezed and displaced oscillator states: closed-form evolution and spectral verification"};
    app.require_subcommand(1);
    Overrides o;

    CLI::App* evolve_cmd = app.add_subcommand("evolve", "trajectory of S(t), D(t), width, centre and phase");
    CLI::App* wave_cmd = app.add_subcommand("wavefunction", "sample Psi(x, t) on the grid");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle and invariant suites");
    CLI::App* symp_cmd = app.add_subcommand("symplectic", "compose generators and map a squeeze parameter");
    for (CLI::App* sub : {evolve_cmd, wave_cmd, verify_cmd, symp_cmd})
        add_common_options(*sub, o);
    wave_cmd->add_option("--time", o.time, "time at which to sample");
    symp_cmd->add_option("--spec", o.spec, "generator product, e.g. \"y(1.57)*z(0.5)*x(0.3)\"");
    symp_cmd->add_option("--s1-re", o.s1_re, "Re S1");
    symp_cmd->add_option("--s1-im", o.s1_im, "Im S1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const RunConfig config = resolve(o);
        if (evolve_cmd->parsed())
            return cmd_evolve(config, out);
        if (wave_cmd->parsed())
            return cmd_wavefunction(config, out);
        if (verify_cmd->parsed())
            return cmd_verify(config, out);
        return cmd_symplectic(config, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "spec error: " << e.what() << '\n';
    } catch (const sqz::Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

} // namespace sqz::cli
