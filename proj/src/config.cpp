#include "semiisac/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semiisac {

using nlohmann::json;

double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

void SystemConfig::validate() const {
    const BandwidthSplit& b = bandwidth;
    require(b.alpha_semi >= 0.0 && b.alpha_semi <= 1.0, "bandwidth: alpha_semi outside [0,1]");
    require(b.beta_semi >= 0.0 && b.beta_semi <= 1.0, "bandwidth: beta_semi outside [0,1]");
    require(b.epsilon_semi >= 0.0 && b.epsilon_semi <= 1.0,
            "bandwidth: epsilon_semi outside [0,1]");
    require(std::abs(b.alpha_semi + b.beta_semi + b.epsilon_semi - 1.0) <= 1e-12,
            "bandwidth: alpha + beta + epsilon must equal 1");
    require(b.total_hz > 0.0, "bandwidth: total_hz must be positive");

    require(powers.P_c > 0.0 && powers.P_r > 0.0 && powers.P_bs > 0.0,
            "powers: all transmit powers must be positive");
    require(powers.G_c > 0.0 && powers.G_r > 0.0, "powers: antenna gains must be positive");
    require(powers.varsigma_c >= 0.0 && powers.varsigma_c < 1.0,
            "powers: varsigma_c outside [0,1)");
    require(powers.varsigma_r >= 0.0 && powers.varsigma_r < 1.0,
            "powers: varsigma_r outside [0,1)");

    require(geometry.d_c >= 1.0 && geometry.d_r >= 1.0,
            "geometry: distances below the 1 m reference");
    require(geometry.alpha_c > 0.0 && geometry.alpha_r > 0.0,
            "geometry: path-loss exponents must be positive");
    require(geometry.f_c > 0.0, "geometry: carrier frequency must be positive");

    require(radar.duty_cycle > 0.0 && radar.duty_cycle <= 1.0,
            "radar: duty_cycle outside (0,1]");
    require(radar.pulse_duration > 0.0, "radar: pulse_duration must be positive");
    require(radar.sigma_rcs > 0.0, "radar: sigma_rcs must be positive");
    require(radar.sigma_tau_sq >= 0.0, "radar: sigma_tau_sq must be nonnegative");
    require(radar.gamma_sq > 0.0, "radar: gamma_sq must be positive");

    require(noise.k_boltzmann > 0.0 && noise.temperature_k > 0.0,
            "noise: Boltzmann constant and temperature must be positive");

    require(thresholds.gamma_th > 0.0 && thresholds.gamma_sic > 0.0 &&
                thresholds.gamma_th_oma > 0.0,
            "thresholds: all thresholds must be positive");

    require(fading.m >= 1, "fading: m must be a positive integer");
    require(psk.order >= 2 && (psk.order & (psk.order - 1)) == 0,
            "psk: order must be a power of two, >= 2");
}

SystemConfig paper_sec6_preset() {
    SystemConfig cfg; // struct defaults are the preset
    cfg.validate();
    return cfg;
}

namespace {

void apply_json(SystemConfig& cfg, const json& j) {
    if (j.contains("bandwidth")) {
        const json& b = j.at("bandwidth");
        if (b.contains("alpha_semi")) cfg.bandwidth.alpha_semi = b.at("alpha_semi");
        if (b.contains("beta_semi")) cfg.bandwidth.beta_semi = b.at("beta_semi");
        if (b.contains("epsilon_semi")) cfg.bandwidth.epsilon_semi = b.at("epsilon_semi");
        if (b.contains("B_hz")) cfg.bandwidth.total_hz = b.at("B_hz");
    }
    if (j.contains("powers")) {
        const json& p = j.at("powers");
        if (p.contains("P_c_dBm")) cfg.powers.P_c = dbm_to_watts(p.at("P_c_dBm"));
        if (p.contains("P_r_dBm")) cfg.powers.P_r = dbm_to_watts(p.at("P_r_dBm"));
        if (p.contains("P_BS_dBm")) cfg.powers.P_bs = dbm_to_watts(p.at("P_BS_dBm"));
        if (p.contains("G_c")) cfg.powers.G_c = p.at("G_c");
        if (p.contains("G_r")) cfg.powers.G_r = p.at("G_r");
        if (p.contains("varsigma_c")) cfg.powers.varsigma_c = p.at("varsigma_c");
        if (p.contains("varsigma_r")) cfg.powers.varsigma_r = p.at("varsigma_r");
    }
    if (j.contains("geometry")) {
        const json& g = j.at("geometry");
        if (g.contains("d_c_m")) cfg.geometry.d_c = g.at("d_c_m");
        if (g.contains("d_r_m")) cfg.geometry.d_r = g.at("d_r_m");
        if (g.contains("alpha_c")) cfg.geometry.alpha_c = g.at("alpha_c");
        if (g.contains("alpha_r")) cfg.geometry.alpha_r = g.at("alpha_r");
        if (g.contains("f_c_hz")) cfg.geometry.f_c = g.at("f_c_hz");
    }
    if (j.contains("radar")) {
        const json& r = j.at("radar");
        if (r.contains("duty_cycle")) cfg.radar.duty_cycle = r.at("duty_cycle");
        if (r.contains("pulse_duration_s")) cfg.radar.pulse_duration = r.at("pulse_duration_s");
        if (r.contains("sigma_rcs_m2")) cfg.radar.sigma_rcs = r.at("sigma_rcs_m2");
        if (r.contains("sigma_tau_sq_s2")) cfg.radar.sigma_tau_sq = r.at("sigma_tau_sq_s2");
        if (r.contains("gamma_sq")) cfg.radar.gamma_sq = r.at("gamma_sq");
    }
    if (j.contains("noise")) {
        const json& n = j.at("noise");
        if (n.contains("k_B")) cfg.noise.k_boltzmann = n.at("k_B");
        if (n.contains("T_temp_K")) cfg.noise.temperature_k = n.at("T_temp_K");
    }
    if (j.contains("thresholds")) {
        const json& t = j.at("thresholds");
        if (t.contains("gamma_th")) cfg.thresholds.gamma_th = t.at("gamma_th");
        if (t.contains("gamma_sic")) cfg.thresholds.gamma_sic = t.at("gamma_sic");
        if (t.contains("gamma_th_oma")) cfg.thresholds.gamma_th_oma = t.at("gamma_th_oma");
    }
    if (j.contains("psk")) {
        const json& p = j.at("psk");
        if (p.contains("M")) cfg.psk.order = p.at("M");
        if (p.contains("standard_mapping")) cfg.psk.standard_mapping = p.at("standard_mapping");
    }
    if (j.contains("fading")) {
        const json& f = j.at("fading");
        if (f.contains("m")) cfg.fading.m = f.at("m");
    }
}

} // namespace

SystemConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    SystemConfig cfg;
    if (j.contains("preset")) {
        const std::string name = j.at("preset");
        if (name != "paper-sec6")
            throw std::invalid_argument("config: unknown preset '" + name + "'");
        cfg = paper_sec6_preset();
    }
    apply_json(cfg, j);
    cfg.validate();
    return cfg;
}

SystemConfig load_config(const std::string& path_or_preset) {
    if (path_or_preset == "paper-sec6") return paper_sec6_preset();
    std::ifstream in(path_or_preset);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path_or_preset +
                                    "' (not a file, not a known preset)");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return config_from_json_text(buffer.str());
}

std::string config_to_json_text(const SystemConfig& cfg) {
    json j;
    j["bandwidth"] = {{"alpha_semi", cfg.bandwidth.alpha_semi},
                      {"beta_semi", cfg.bandwidth.beta_semi},
                      {"epsilon_semi", cfg.bandwidth.epsilon_semi},
                      {"B_hz", cfg.bandwidth.total_hz}};
    j["powers"] = {{"P_c_dBm", watts_to_dbm(cfg.powers.P_c)},
                   {"P_r_dBm", watts_to_dbm(cfg.powers.P_r)},
                   {"P_BS_dBm", watts_to_dbm(cfg.powers.P_bs)},
                   {"G_c", cfg.powers.G_c},
                   {"G_r", cfg.powers.G_r},
                   {"varsigma_c", cfg.powers.varsigma_c},
                   {"varsigma_r", cfg.powers.varsigma_r}};
    j["geometry"] = {{"d_c_m", cfg.geometry.d_c},
                     {"d_r_m", cfg.geometry.d_r},
                     {"alpha_c", cfg.geometry.alpha_c},
                     {"alpha_r", cfg.geometry.alpha_r},
                     {"f_c_hz", cfg.geometry.f_c}};
    j["radar"] = {{"duty_cycle", cfg.radar.duty_cycle},
                  {"pulse_duration_s", cfg.radar.pulse_duration},
                  {"sigma_rcs_m2", cfg.radar.sigma_rcs},
                  {"sigma_tau_sq_s2", cfg.radar.sigma_tau_sq},
                  {"gamma_sq", cfg.radar.gamma_sq}};
    j["noise"] = {{"k_B", cfg.noise.k_boltzmann}, {"T_temp_K", cfg.noise.temperature_k}};
    j["thresholds"] = {{"gamma_th", cfg.thresholds.gamma_th},
                       {"gamma_sic", cfg.thresholds.gamma_sic},
                       {"gamma_th_oma", cfg.thresholds.gamma_th_oma}};
    j["fading"] = {{"m", cfg.fading.m}};
    j["psk"] = {{"M", cfg.psk.order}, {"standard_mapping", cfg.psk.standard_mapping}};
    return j.dump(2);
}

void set_config_field(SystemConfig& cfg, const std::string& path, double value) {
    if (path == "powers.P_c_dBm") {
        cfg.powers.P_c = dbm_to_watts(value);
    } else if (path == "powers.P_r_dBm") {
        cfg.powers.P_r = dbm_to_watts(value);
    } else if (path == "powers.P_BS_dBm") {
        cfg.powers.P_bs = dbm_to_watts(value);
    } else if (path == "bandwidth.beta_semi") {
        if (value < 0.0 || value + cfg.bandwidth.alpha_semi > 1.0 + 1e-12)
            throw std::invalid_argument(
                "set_config_field: beta_semi + alpha_semi would exceed 1");
        cfg.bandwidth.beta_semi = value;
        cfg.bandwidth.epsilon_semi = 1.0 - cfg.bandwidth.alpha_semi - value;
        if (cfg.bandwidth.epsilon_semi < 0.0) cfg.bandwidth.epsilon_semi = 0.0;
    } else if (path == "geometry.d_c_m") {
        cfg.geometry.d_c = value;
    } else if (path == "geometry.d_r_m") {
        cfg.geometry.d_r = value;
    } else if (path == "thresholds.gamma_th") {
        cfg.thresholds.gamma_th = value;
    } else if (path == "thresholds.gamma_sic") {
        cfg.thresholds.gamma_sic = value;
    } else if (path == "radar.sigma_tau_sq_s2") {
        cfg.radar.sigma_tau_sq = value;
    } else {
        throw std::invalid_argument("set_config_field: unknown scalar field '" + path + "'");
    }
    cfg.validate();
}

} // namespace semiisac
