#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectiforce/estimates.hpp"
#include "rectiforce/kernels.hpp"
#include "rectiforce/medium.hpp"
#include "rectiforce/quadrature.hpp"

namespace rectiforce::cli {

/// Bad flags, bad config files, invalid values. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct Grid {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    bool log = false;

    /// Grid values; throws UsageError on an empty or inverted grid.
    std::vector<double> values(const char* name) const;
};

enum class MapKind { quantum, thermal, spectrum };

struct MapSettings {
    MapKind kind = MapKind::quantum;
    std::vector<double> zeta{1.5};  // depths for (x, p) maps
    Grid x{1e-3, 1e2, 60, true};
    Grid p{1e-1, 1e4, 60, true};
};

struct PrefactorSettings {
    Grid theta{0.03, 30.0, 30, true};
    double zeta = 0.2;  // depth of the f_norm comparison column
};

struct EstimateSettings {
    std::string preset = "gold";  // "gold" or "none"
    std::optional<double> n0;
    std::optional<double> v_F;
    std::optional<double> m;
    std::optional<double> tau;
    std::optional<double> omega_p;
    double temperature = 300.0;  // K
    double zeta_cutoff = 0.0;    // <= 0: l_D / lambda_p

    EstimateInputs resolve() const;
};

/// Fully resolved settings for one command. Defaults follow the gold-like
/// parameters Omega tau = 210, theta = 1.25.
struct RunConfig {
    std::string command;
    MaterialKind model = MaterialKind::drude;
    double omega_p_tau = kDefaultOmegaPTau;
    std::vector<double> theta{kDefaultTheta};
    Grid z{0.2, 8.0, 40, false};
    ConductivityPart part = ConductivityPart::full;
    QuadratureSpec quadrature;
    bool quantum = false;
    OutputFormat format = OutputFormat::csv;
    std::string out;  // empty: stdout
    int jobs = 1;
    bool strict = false;
    MapSettings map;
    PrefactorSettings prefactor;
    EstimateSettings estimates;

    void validate() const;
};

nlohmann::ordered_json to_json(const RunConfig& config);

/// Overlays the keys present in `j` onto `base`. Unknown keys are rejected.
RunConfig apply_json(RunConfig base, const nlohmann::ordered_json& j);

/// Reads a config file. A top-level "runs" array yields one config per
/// entry, each entry overriding the top-level keys.
std::vector<RunConfig> load_config_file(const std::string& path);

std::vector<double> parse_number_list(const std::string& text, const char* name);

std::string to_string(MapKind kind);
std::string to_string(OutputFormat format);

}  // namespace rectiforce::cli
