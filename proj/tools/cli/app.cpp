#include "cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace rectiforce::cli {
namespace {

// Explicit command-line values; each one overrides the config file.
struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> model;
    std::optional<double> omega_p_tau;
    std::optional<std::string> theta;
    std::optional<double> zmin, zmax;
    std::optional<int> points;
    bool log = false;
    std::optional<std::string> part;
    std::optional<double> rel_tol;
    std::optional<int> max_subdivisions;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<int> jobs;
    bool strict = false;
    bool quantum = false;
    // spectral-map
    std::optional<std::string> kind;
    std::optional<std::string> zeta;
    std::optional<double> xmin, xmax, pmin, pmax;
    std::optional<int> xpoints, ppoints;
    bool linear = false;
    // prefactor
    std::optional<double> theta_min, theta_max;
    std::optional<int> theta_points;
    std::optional<double> prefactor_zeta;
    // estimates
    std::optional<std::string> preset;
    std::optional<double> n0, v_F, mass, tau, omega_p, temperature, zeta_cutoff;
    // selftest
    bool perturb_branch = false;
};

void add_output_options(CLI::App* app, Flags& f)
{
    app->add_option("--config", f.config, "JSON config file; explicit flags override it");
    app->add_option("--out", f.out, "Output path (default: stdout)");
    app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--jobs", f.jobs, "Worker threads (0: all cores)");
    app->add_flag("--strict", f.strict, "Exit with status 1 if any point fails");
}

void add_model_options(CLI::App* app, Flags& f)
{
    app->add_option("--model", f.model, "Material model")->check(CLI::IsMember({"drude", "plasma", "ideal"}));
    app->add_option("--omega-p-tau", f.omega_p_tau, "Plasma frequency times scattering time");
    app->add_option("--theta", f.theta, "Reduced temperature(s) k_B T tau / hbar, comma separated");
    app->add_option("--part", f.part, "Conductivity part")->check(CLI::IsMember({"full", "real", "imag"}));
    app->add_option("--rel-tol", f.rel_tol, "Relative quadrature tolerance");
    app->add_option("--max-subdivisions", f.max_subdivisions, "Panel budget per adaptive integral");
}

void add_depth_grid(CLI::App* app, Flags& f)
{
    app->add_option("--zmin", f.zmin, "Smallest depth z / lambda_p");
    app->add_option("--zmax", f.zmax, "Largest depth z / lambda_p");
    app->add_option("--points", f.points, "Number of depths");
    app->add_flag("--log", f.log, "Logarithmic depth spacing");
}

RunConfig resolve(const std::string& command, const Flags& f, const CLI::App& sub)
{
    RunConfig c;
    if (f.config) {
        const auto runs = load_config_file(*f.config);
        if (runs.size() != 1) throw UsageError("config with several runs: use `rectiforce run --config`");
        c = runs.front();
    }
    c.command = command;
    if (f.model) c.model = *parse_material_kind(*f.model);
    if (f.omega_p_tau) c.omega_p_tau = *f.omega_p_tau;
    if (f.theta) c.theta = parse_number_list(*f.theta, "--theta");
    if (f.zmin) c.z.min = *f.zmin;
    if (f.zmax) c.z.max = *f.zmax;
    if (f.points) c.z.points = *f.points;
    if (f.log) c.z.log = true;
    if (f.part) c.part = *parse_conductivity_part(*f.part);
    if (f.rel_tol) c.quadrature.rel_tol = *f.rel_tol;
    if (f.max_subdivisions) c.quadrature.max_subdivisions = *f.max_subdivisions;
    if (f.out) c.out = *f.out;
    if (f.format) c.format = *f.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (f.jobs) c.jobs = *f.jobs;
    if (f.strict) c.strict = true;
    if (f.quantum) c.quantum = true;
    if (f.kind) {
        RunConfig probe = apply_json(RunConfig{}, {{"map", {{"kind", *f.kind}}}});
        c.map.kind = probe.map.kind;
    }
    if (f.zeta) c.map.zeta = parse_number_list(*f.zeta, "--zeta");
    if (f.xmin) c.map.x.min = *f.xmin;
    if (f.xmax) c.map.x.max = *f.xmax;
    if (f.xpoints) c.map.x.points = *f.xpoints;
    if (f.pmin) c.map.p.min = *f.pmin;
    if (f.pmax) c.map.p.max = *f.pmax;
    if (f.ppoints) c.map.p.points = *f.ppoints;
    if (f.linear) c.map.x.log = c.map.p.log = false;
    if (f.theta_min) c.prefactor.theta.min = *f.theta_min;
    if (f.theta_max) c.prefactor.theta.max = *f.theta_max;
    if (f.theta_points) c.prefactor.theta.points = *f.theta_points;
    if (f.prefactor_zeta) c.prefactor.zeta = *f.prefactor_zeta;
    if (f.preset) c.estimates.preset = *f.preset;
    if (f.n0) c.estimates.n0 = f.n0;
    if (f.v_F) c.estimates.v_F = f.v_F;
    if (f.mass) c.estimates.m = f.mass;
    if (f.tau) c.estimates.tau = f.tau;
    if (f.omega_p) c.estimates.omega_p = f.omega_p;
    if (f.temperature) c.estimates.temperature = *f.temperature;
    if (f.zeta_cutoff) c.estimates.zeta_cutoff = *f.zeta_cutoff;
    c.validate();
    return c;
}

void emit(const RunConfig& c, const CommandResult& r, std::ostream& out)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) throw UsageError("cannot write output file '" + c.out + "'");
        sink = &file;
    }
    if (c.format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["config"] = to_json(c);
        doc["rows"] = rows_json(r.table);
        *sink << doc.dump(2) << '\n';
    } else {
        write_csv(r.table, *sink);
    }
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    CommandResult r;
    if (c.command == "force-profile") {
        r = cmd_force_profile(c);
    } else if (c.command == "spectral-map") {
        r = cmd_spectral_map(c);
    } else if (c.command == "prefactor") {
        r = cmd_prefactor(c);
    } else if (c.command == "estimates") {
        r = cmd_estimates(c);
    } else {
        throw UsageError("command '" + c.command + "' cannot be run from a config");
    }
    emit(c, r, out);
    for (const auto& d : r.diagnostics) err << "warning: " << d << '\n';
    return (c.strict && !r.all_converged) ? kExitFailure : kExitSuccess;
}

int selftest(const Flags& f, std::ostream& out)
{
    SelftestOptions options;
    if (f.rel_tol) options.quadrature.rel_tol = *f.rel_tol;
    options.perturb_branch = f.perturb_branch;
    options.quadrature.validate();
    const auto checks = cmd_selftest(options);
    int failed = 0;
    for (const auto& check : checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
        failed += check.passed ? 0 : 1;
    }
    out << (failed ? "selftest FAILED: " : "selftest passed: ") << (checks.size() - failed) << "/"
        << checks.size() << " checks\n";
    return failed ? kExitFailure : kExitSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rectified Lorentz force density beneath a conductor surface", "rectiforce"};
    app.require_subcommand(1);
    Flags f;

    auto* profile = app.add_subcommand("force-profile", "Thermal force density over a depth grid");
    add_model_options(profile, f);
    add_depth_grid(profile, f);
    add_output_options(profile, f);
    profile->add_flag("--quantum", f.quantum, "Also compute the zero-temperature force");

    auto* map = app.add_subcommand("spectral-map", "Integrand and spectrum maps with guide curves");
    add_model_options(map, f);
    add_depth_grid(map, f);
    add_output_options(map, f);
    map->add_option("--kind", f.kind, "Map kind")->check(CLI::IsMember({"quantum", "thermal", "spectrum"}));
    map->add_option("--zeta", f.zeta, "Depth(s) for (x, p) maps, comma separated");
    map->add_option("--xmin", f.xmin, "Smallest reduced frequency");
    map->add_option("--xmax", f.xmax, "Largest reduced frequency");
    map->add_option("--xpoints", f.xpoints, "Number of frequencies");
    map->add_option("--pmin", f.pmin, "Smallest reduced wavevector");
    map->add_option("--pmax", f.pmax, "Largest reduced wavevector");
    map->add_option("--ppoints", f.ppoints, "Number of wavevectors");
    map->add_flag("--linear", f.linear, "Linear instead of logarithmic x and p grids");

    auto* prefactor = app.add_subcommand("prefactor", "Short-distance amplitude c(T) over a theta sweep");
    add_model_options(prefactor, f);
    add_output_options(prefactor, f);
    prefactor->add_option("--theta-min", f.theta_min, "Smallest theta");
    prefactor->add_option("--theta-max", f.theta_max, "Largest theta");
    prefactor->add_option("--theta-points", f.theta_points, "Number of theta values (log spaced)");
    prefactor->add_option("--zeta", f.prefactor_zeta, "Depth of the numerical comparison column");

    auto* estimates = app.add_subcommand("estimates", "Work-function shift and screening charge in SI units");
    add_output_options(estimates, f);
    estimates->add_option("--preset", f.preset, "Material preset")->check(CLI::IsMember({"gold", "none"}));
    estimates->add_option("--n0", f.n0, "Carrier density (1/m^3)");
    estimates->add_option("--vf", f.v_F, "Fermi velocity (m/s)");
    estimates->add_option("--mass", f.mass, "Effective mass (kg)");
    estimates->add_option("--tau", f.tau, "Scattering time (s)");
    estimates->add_option("--omega-p", f.omega_p, "Plasma frequency (rad/s)");
    estimates->add_option("--temperature", f.temperature, "Temperature (K)");
    estimates->add_option("--zeta-cutoff", f.zeta_cutoff, "Cutoff depth in lambda_p (default l_D)");

    auto* self = app.add_subcommand("selftest", "Run the built-in oracle checks");
    self->add_option("--rel-tol", f.rel_tol, "Relative quadrature tolerance");
    self->add_flag("--perturb-branch", f.perturb_branch, "Test hook: take the wrong square-root branch")
        ->group("");

    auto* run = app.add_subcommand("run", "Execute every run of a JSON config file");
    run->add_option("--config", f.config, "JSON config file")->required();
    run->add_option("--jobs", f.jobs, "Worker threads (0: all cores)");
    run->add_flag("--strict", f.strict, "Exit with status 1 if any point fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (self->parsed()) return selftest(f, out);
        if (run->parsed()) {
            int status = kExitSuccess;
            for (RunConfig c : load_config_file(*f.config)) {
                if (f.jobs) c.jobs = *f.jobs;
                if (f.strict) c.strict = true;
                c.validate();
                status = std::max(status, execute(c, out, err));
            }
            return status;
        }
        for (auto* sub : {profile, map, prefactor, estimates}) {
            if (sub->parsed()) return execute(resolve(sub->get_name(), f, *sub), out, err);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace rectiforce::cli
