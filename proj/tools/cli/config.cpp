#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rectiforce/units.hpp"

namespace rectiforce::cli {
namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where)
{
    if (!j.is_object()) throw UsageError(where + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw UsageError(where + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get(const json& j, const std::string& key, const std::string& where)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(where + "." + key + ": " + e.what());
    }
}

Grid apply_grid(Grid g, const json& j, const std::string& where)
{
    reject_unknown(j, {"min", "max", "points", "log"}, where);
    if (j.contains("min")) g.min = get<double>(j, "min", where);
    if (j.contains("max")) g.max = get<double>(j, "max", where);
    if (j.contains("points")) g.points = get<int>(j, "points", where);
    if (j.contains("log")) g.log = get<bool>(j, "log", where);
    return g;
}

json grid_json(const Grid& g)
{
    return {{"min", g.min}, {"max", g.max}, {"points", g.points}, {"log", g.log}};
}

json optional_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::optional<double> optional_number(const json& j, const std::string& key, const std::string& where)
{
    if (j.at(key).is_null()) return std::nullopt;
    return get<double>(j, key, where);
}

MapKind parse_map_kind(const std::string& s)
{
    if (s == "quantum") return MapKind::quantum;
    if (s == "thermal") return MapKind::thermal;
    if (s == "spectrum") return MapKind::spectrum;
    throw UsageError("unknown map kind '" + s + "' (quantum, thermal, spectrum)");
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw UsageError("unknown format '" + s + "' (csv, json)");
}

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(name) + " must be positive");
}

}  // namespace

std::vector<double> Grid::values(const char* name) const
{
    if (points < 1) throw UsageError(std::string(name) + " grid is empty");
    if (!std::isfinite(min) || !std::isfinite(max) || max < min || (points > 1 && max == min)) {
        throw UsageError(std::string(name) + " grid needs min < max");
    }
    if (log && !(min > 0.0)) throw UsageError(std::string(name) + " log grid needs min > 0");
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        v[static_cast<std::size_t>(i)] =
            log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min))) : min + t * (max - min);
    }
    v.front() = min;
    if (points > 1) v.back() = max;
    return v;
}

EstimateInputs EstimateSettings::resolve() const
{
    EstimateInputs in;
    if (preset == "gold") {
        in = EstimateInputs::gold_like();
    } else if (preset != "none") {
        throw UsageError("unknown estimate preset '" + preset + "' (gold, none)");
    }
    if (n0) in.n0 = *n0;
    if (m) in.m = *m;
    if (v_F) in.v_F = *v_F;
    if (omega_p) in.omega_p = *omega_p;
    if (tau) in.tau_seconds = *tau;
    if (preset == "none") {
        if (!n0 || !m || !v_F || !tau) {
            throw UsageError("estimates without a preset need --n0, --vf, --mass and --tau");
        }
        if (!omega_p) in.omega_p = free_electron_plasma_frequency(in.n0, in.m);
    }
    try {
        in.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return in;
}

void RunConfig::validate() const
{
    require_positive(omega_p_tau, "omega_p_tau");
    if (theta.empty()) throw UsageError("theta list is empty");
    for (double t : theta) require_positive(t, "theta");
    try {
        quadrature.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (jobs < 0) throw UsageError("jobs must be >= 0");
    if (command == "force-profile") {
        for (double zeta : z.values("z")) require_positive(zeta, "zeta");
    } else if (command == "spectral-map") {
        if (map.kind == MapKind::spectrum) {
            for (double zeta : z.values("z")) require_positive(zeta, "zeta");
        } else {
            if (map.zeta.empty()) throw UsageError("map depth list is empty");
            for (double zeta : map.zeta) require_positive(zeta, "zeta");
            for (double p : map.p.values("p")) {
                if (p < 0.0) throw UsageError("p grid must be >= 0");
            }
        }
        for (double x : map.x.values("x")) require_positive(x, "x");
    } else if (command == "prefactor") {
        for (double t : prefactor.theta.values("theta")) require_positive(t, "theta");
        require_positive(prefactor.zeta, "prefactor zeta");
    } else if (command == "estimates") {
        require_positive(estimates.temperature, "temperature");
        estimates.resolve();
    } else if (command.empty()) {
        throw UsageError("config does not name a command");
    } else if (command != "selftest") {
        throw UsageError("unknown command '" + command + "'");
    }
}

std::string to_string(MapKind kind)
{
    switch (kind) {
    case MapKind::quantum: return "quantum";
    case MapKind::thermal: return "thermal";
    case MapKind::spectrum: return "spectrum";
    }
    return "unknown";
}

std::string to_string(OutputFormat format)
{
    return format == OutputFormat::csv ? "csv" : "json";
}

json to_json(const RunConfig& c)
{
    json j;
    j["command"] = c.command;
    j["model"] = std::string(to_string(c.model));
    j["omega_p_tau"] = c.omega_p_tau;
    j["theta"] = c.theta;
    j["z"] = grid_json(c.z);
    j["part"] = std::string(to_string(c.part));
    j["quadrature"] = {{"rel_tol", c.quadrature.rel_tol},
                       {"abs_tol", c.quadrature.abs_tol},
                       {"max_subdivisions", c.quadrature.max_subdivisions},
                       {"tail_epsilon", c.quadrature.tail_epsilon}};
    j["quantum"] = c.quantum;
    j["format"] = to_string(c.format);
    j["out"] = c.out;
    j["jobs"] = c.jobs;
    j["strict"] = c.strict;
    j["map"] = {{"kind", to_string(c.map.kind)},
                {"zeta", c.map.zeta},
                {"x", grid_json(c.map.x)},
                {"p", grid_json(c.map.p)}};
    j["prefactor"] = {{"theta", grid_json(c.prefactor.theta)}, {"zeta", c.prefactor.zeta}};
    j["estimates"] = {{"preset", c.estimates.preset},
                      {"n0", optional_json(c.estimates.n0)},
                      {"v_F", optional_json(c.estimates.v_F)},
                      {"m", optional_json(c.estimates.m)},
                      {"tau", optional_json(c.estimates.tau)},
                      {"omega_p", optional_json(c.estimates.omega_p)},
                      {"temperature", c.estimates.temperature},
                      {"zeta_cutoff", c.estimates.zeta_cutoff}};
    return j;
}

RunConfig apply_json(RunConfig c, const json& j)
{
    const std::string w = "config";
    reject_unknown(j, {"command", "model", "omega_p_tau", "theta", "z", "part", "quadrature", "quantum",
                       "format", "out", "jobs", "strict", "map", "prefactor", "estimates", "runs"},
                   w);
    if (j.contains("command")) c.command = get<std::string>(j, "command", w);
    if (j.contains("model")) {
        const auto kind = parse_material_kind(get<std::string>(j, "model", w));
        if (!kind) throw UsageError("config.model: expected drude, plasma or ideal");
        c.model = *kind;
    }
    if (j.contains("omega_p_tau")) c.omega_p_tau = get<double>(j, "omega_p_tau", w);
    if (j.contains("theta")) {
        c.theta = j.at("theta").is_array() ? get<std::vector<double>>(j, "theta", w)
                                           : std::vector<double>{get<double>(j, "theta", w)};
    }
    if (j.contains("z")) c.z = apply_grid(c.z, j.at("z"), w + ".z");
    if (j.contains("part")) {
        const auto part = parse_conductivity_part(get<std::string>(j, "part", w));
        if (!part) throw UsageError("config.part: expected full, real or imag");
        c.part = *part;
    }
    if (j.contains("quadrature")) {
        const json& q = j.at("quadrature");
        const std::string wq = w + ".quadrature";
        reject_unknown(q, {"rel_tol", "abs_tol", "max_subdivisions", "tail_epsilon"}, wq);
        if (q.contains("rel_tol")) c.quadrature.rel_tol = get<double>(q, "rel_tol", wq);
        if (q.contains("abs_tol")) c.quadrature.abs_tol = get<double>(q, "abs_tol", wq);
        if (q.contains("max_subdivisions")) c.quadrature.max_subdivisions = get<int>(q, "max_subdivisions", wq);
        if (q.contains("tail_epsilon")) c.quadrature.tail_epsilon = get<double>(q, "tail_epsilon", wq);
    }
    if (j.contains("quantum")) c.quantum = get<bool>(j, "quantum", w);
    if (j.contains("format")) c.format = parse_format(get<std::string>(j, "format", w));
    if (j.contains("out")) c.out = get<std::string>(j, "out", w);
    if (j.contains("jobs")) c.jobs = get<int>(j, "jobs", w);
    if (j.contains("strict")) c.strict = get<bool>(j, "strict", w);
    if (j.contains("map")) {
        const json& m = j.at("map");
        const std::string wm = w + ".map";
        reject_unknown(m, {"kind", "zeta", "x", "p"}, wm);
        if (m.contains("kind")) c.map.kind = parse_map_kind(get<std::string>(m, "kind", wm));
        if (m.contains("zeta")) {
            c.map.zeta = m.at("zeta").is_array() ? get<std::vector<double>>(m, "zeta", wm)
                                                 : std::vector<double>{get<double>(m, "zeta", wm)};
        }
        if (m.contains("x")) c.map.x = apply_grid(c.map.x, m.at("x"), wm + ".x");
        if (m.contains("p")) c.map.p = apply_grid(c.map.p, m.at("p"), wm + ".p");
    }
    if (j.contains("prefactor")) {
        const json& p = j.at("prefactor");
        const std::string wp = w + ".prefactor";
        reject_unknown(p, {"theta", "zeta"}, wp);
        if (p.contains("theta")) c.prefactor.theta = apply_grid(c.prefactor.theta, p.at("theta"), wp + ".theta");
        if (p.contains("zeta")) c.prefactor.zeta = get<double>(p, "zeta", wp);
    }
    if (j.contains("estimates")) {
        const json& e = j.at("estimates");
        const std::string we = w + ".estimates";
        reject_unknown(e, {"preset", "n0", "v_F", "m", "tau", "omega_p", "temperature", "zeta_cutoff"}, we);
        if (e.contains("preset")) c.estimates.preset = get<std::string>(e, "preset", we);
        if (e.contains("n0")) c.estimates.n0 = optional_number(e, "n0", we);
        if (e.contains("v_F")) c.estimates.v_F = optional_number(e, "v_F", we);
        if (e.contains("m")) c.estimates.m = optional_number(e, "m", we);
        if (e.contains("tau")) c.estimates.tau = optional_number(e, "tau", we);
        if (e.contains("omega_p")) c.estimates.omega_p = optional_number(e, "omega_p", we);
        if (e.contains("temperature")) c.estimates.temperature = get<double>(e, "temperature", we);
        if (e.contains("zeta_cutoff")) c.estimates.zeta_cutoff = get<double>(e, "zeta_cutoff", we);
    }
    return c;
}

std::vector<RunConfig> load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    json top = j;
    top.erase("runs");
    const RunConfig base = apply_json(RunConfig{}, top);
    if (!j.contains("runs")) return {base};
    if (!j.at("runs").is_array() || j.at("runs").empty()) {
        throw UsageError("config file '" + path + "': runs must be a non-empty array");
    }
    std::vector<RunConfig> runs;
    for (const json& entry : j.at("runs")) {
        if (entry.contains("runs")) throw UsageError("config file '" + path + "': nested runs");
        runs.push_back(apply_json(base, entry));
    }
    return runs;
}

std::vector<double> parse_number_list(const std::string& text, const char* name)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(name) + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) throw UsageError(std::string(name) + ": empty list");
    return out;
}

}  // namespace rectiforce::cli
