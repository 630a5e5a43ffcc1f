#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rectiforce/estimates.hpp"
#include "rectiforce/force.hpp"
#include "rectiforce/optics.hpp"
#include "rectiforce/parallel.hpp"
#include "rectiforce/spectral.hpp"

namespace rectiforce::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string short_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

MaterialModel model_of(const RunConfig& c)
{
    return make_model(c.model, c.omega_p_tau);
}

struct MapRow {
    double theta = 0.0;
    double zeta = 0.0;
    double x = 0.0;
    double p = kNaN;
    double value = kNaN;
    double scaled = kNaN;
    bool converged = true;
    std::string error;
};

MapRow map_row(double theta, double zeta, double x, double p)
{
    MapRow row;
    row.theta = theta;
    row.zeta = zeta;
    row.x = x;
    row.p = p;
    return row;
}

}  // namespace

CommandResult cmd_force_profile(const RunConfig& config)
{
    config.validate();
    const MaterialModel model = model_of(config);
    ProfileOptions options;
    options.include_quantum = config.quantum;
    options.part = config.part;
    options.jobs = config.jobs;
    const std::vector<double> zetas = config.z.values("z");
    const auto points = force_profile(model, zetas, config.theta, config.quadrature, options);

    CommandResult r;
    r.table.columns = {"model", "theta", "zeta", "f_reduced", "f_norm", "err_estimate", "converged"};
    if (config.quantum) {
        r.table.columns.push_back("f_quantum");
        r.table.columns.push_back("f_total");
    }
    for (const ForcePoint& pt : points) {
        std::vector<Cell> row{std::string(to_string(model.kind)), pt.theta, pt.zeta, pt.f_thermal,
                              pt.f_norm, pt.error_estimate, pt.converged};
        if (config.quantum) {
            row.emplace_back(pt.f_quantum);
            row.emplace_back(pt.f_total);
        }
        r.table.add_row(std::move(row));
        if (!pt.converged) {
            r.all_converged = false;
            r.diagnostics.push_back("theta=" + short_number(pt.theta) + " zeta=" + short_number(pt.zeta) + ": "
                                    + (pt.error.empty() ? "quadrature did not converge" : pt.error));
        }
    }
    return r;
}

CommandResult cmd_spectral_map(const RunConfig& config)
{
    config.validate();
    const MaterialModel model = model_of(config);
    const double omega = model.omega_p_tau;
    const std::vector<double> xs = config.map.x.values("x");

    std::vector<MapRow> rows;
    if (config.map.kind == MapKind::spectrum) {
        for (double theta : config.theta) {
            for (double zeta : config.z.values("z")) {
                for (double x : xs) rows.push_back(map_row(theta, zeta, x, kNaN));
            }
        }
    } else {
        const std::vector<double> ps = config.map.p.values("p");
        const std::vector<double> thetas =
            config.map.kind == MapKind::quantum ? std::vector<double>{config.theta.front()} : config.theta;
        for (double theta : thetas) {
            for (double zeta : config.map.zeta) {
                for (double x : xs) {
                    for (double p : ps) rows.push_back(map_row(theta, zeta, x, p));
                }
            }
        }
    }

    parallel_for(rows.size(), config.jobs, [&](std::size_t i) {
        MapRow& row = rows[i];
        try {
            switch (config.map.kind) {
            case MapKind::quantum:
                row.value = quantum_kernel_imag(model, row.x, row.p, row.zeta);
                row.scaled = row.value * row.zeta * row.zeta * row.zeta;
                break;
            case MapKind::thermal:
                row.value = thermal_kernel(model, config.part, row.x, row.p, row.zeta, row.theta);
                row.scaled = row.value * row.zeta * row.zeta;
                break;
            case MapKind::spectrum: {
                const IntegrationResult s =
                    spectral_density(model, row.x, row.zeta, row.theta, config.quadrature, config.part);
                row.value = s.value;
                row.scaled = s.value * row.zeta * row.zeta;
                row.converged = s.converged;
                break;
            }
            }
        } catch (const std::exception& e) {
            row.converged = false;
            row.error = e.what();
        }
    });

    CommandResult r;
    r.table.columns = {"kind",  "model",  "part",          "theta",        "zeta",         "x",
                       "p",     "value",  "scaled",        "light_cone_p", "diffusion_x",  "drude_knee_x",
                       "depth_p", "thermal_x", "converged"};
    const std::string part =
        config.map.kind == MapKind::quantum ? std::string("full") : std::string(to_string(config.part));
    for (const MapRow& row : rows) {
        const double depth_p = omega / row.zeta;
        const double diffusion_x = diffusion_frequency(std::isnan(row.p) ? depth_p : row.p, omega);
        r.table.add_row({to_string(config.map.kind), std::string(to_string(model.kind)), part, row.theta,
                         row.zeta, row.x, row.p, row.value, row.scaled, row.x, diffusion_x, 1.0, depth_p,
                         row.theta, row.converged});
        if (!row.converged) {
            r.all_converged = false;
            r.diagnostics.push_back("x=" + short_number(row.x) + " zeta=" + short_number(row.zeta) + ": "
                                    + (row.error.empty() ? "quadrature did not converge" : row.error));
        }
    }
    return r;
}

CommandResult cmd_prefactor(const RunConfig& config)
{
    config.validate();
    const MaterialModel model = model_of(config);
    const std::vector<double> thetas = config.prefactor.theta.values("theta");
    struct Row {
        double closed = kNaN, numeric = kNaN, f_norm = kNaN;
        bool converged = true;
        std::string error;
    };
    std::vector<Row> rows(thetas.size());
    parallel_for(rows.size(), config.jobs, [&](std::size_t i) {
        try {
            rows[i].closed = prefactor_c(thetas[i], model.omega_p_tau).normalized;
            rows[i].numeric = prefactor_c_numeric(thetas[i], model.omega_p_tau, config.quadrature).normalized;
            const ForceValue f = force_thermal(model, config.prefactor.zeta, thetas[i], config.quadrature);
            rows[i].f_norm = f.normalized;
            rows[i].converged = f.converged;
        } catch (const std::exception& e) {
            rows[i].converged = false;
            rows[i].error = e.what();
        }
    });

    CommandResult r;
    r.table.columns = {"theta", "c_closed_norm", "c_numeric_norm",
                       "f_norm_at_zeta" + short_number(config.prefactor.zeta), "converged"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        r.table.add_row({thetas[i], rows[i].closed, rows[i].numeric, rows[i].f_norm, rows[i].converged});
        if (!rows[i].converged) {
            r.all_converged = false;
            r.diagnostics.push_back("theta=" + short_number(thetas[i]) + ": "
                                    + (rows[i].error.empty() ? "quadrature did not converge" : rows[i].error));
        }
    }
    return r;
}

CommandResult cmd_estimates(const RunConfig& config)
{
    config.validate();
    const EstimateInputs inputs = config.estimates.resolve();
    const SiScales scales = si_scales(inputs.anchors());
    const double theta = reduced_temperature(config.estimates.temperature, inputs.anchors());
    const WorkFunctionShift phi = work_function_shift(inputs, theta);
    const SurfaceCharge charge = surface_charge(inputs, theta, config.estimates.zeta_cutoff);

    CommandResult r;
    r.table.columns = {"quantity", "route", "value", "unit"};
    auto add = [&](const char* q, const char* route, double v, const char* unit) {
        r.table.add_row({std::string(q), std::string(route), v, std::string(unit)});
    };
    add("temperature", "input", config.estimates.temperature, "K");
    add("theta", "input", theta, "1");
    add("omega_p_tau", "input", scales.omega_p_tau, "1");
    add("plasma_wavelength", "input", scales.plasma_wavelength, "m");
    add("screening_length", "input", inputs.screening_length(), "m");
    add("fermi_velocity", "input", inputs.v_F, "m/s");
    add("c_norm", "closed_form", phi.c_norm, "1");
    add("fine_structure_term", "factored", phi.fine_structure_term, "1");
    add("momentum_term", "factored", phi.momentum_term, "1");
    add("work_function_shift", "direct", phi.electron_volts, "eV");
    add("work_function_shift", "factored", phi.factored_electron_volts, "eV");
    add("surface_charge", "direct", charge.coulombs_per_m2, "C/m^2");
    add("surface_charge", "factored", charge.factored_coulombs_per_m2, "C/m^2");
    add("surface_charge", "direct", charge.elementary_per_um2, "e/um^2");
    add("surface_charge", "factored", charge.factored_elementary_per_um2, "e/um^2");
    add("cutoff_depth", "direct", charge.zeta_cutoff, "lambda_p");
    return r;
}

}  // namespace rectiforce::cli
