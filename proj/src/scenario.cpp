#include "semiisac/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace semiisac {

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::FdIsac: return "fd-isac";
        case Scenario::OmaSemi: return "oma-semi";
        case Scenario::NomaSemiI: return "noma-semi-1";
        case Scenario::NomaSemiII: return "noma-semi-2";
    }
    return "?";
}

std::string to_string(User u) { return u == User::Comm ? "c" : "r"; }

Scenario scenario_from_string(const std::string& name) {
    if (name == "fd-isac") return Scenario::FdIsac;
    if (name == "oma-semi") return Scenario::OmaSemi;
    if (name == "noma-semi-1") return Scenario::NomaSemiI;
    if (name == "noma-semi-2") return Scenario::NomaSemiII;
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

User user_from_string(const std::string& name) {
    if (name == "c") return User::Comm;
    if (name == "r") return User::Radar;
    throw std::invalid_argument("unknown user '" + name + "' (expected c or r)");
}

namespace {

struct ReceivedPowers {
    double comm_at_dc; // G_c * P_c * pathloss at transmitter distance, unit fading
    double comm_at_dr; // G_c * P_r * pathloss at target distance, unit fading
    double echo_mean;  // mean residual-echo interference
    double noise;
};

ReceivedPowers received_powers(const SystemConfig& cfg) {
    ReceivedPowers p;
    p.comm_at_dc =
        cfg.powers.P_c * cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_c);
    p.comm_at_dr =
        cfg.powers.P_r * cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_r);
    p.echo_mean = mean_radar_interference(cfg);
    p.noise = cfg.noise_power();
    return p;
}

} // namespace

DerivedConstants derive_constants(const SystemConfig& cfg) {
    cfg.validate();
    if (cfg.bandwidth.beta_semi <= 0.0)
        throw std::domain_error(
            "derive_constants: beta_semi = 0 leaves no shared band; echo-dependent "
            "constants are undefined");

    const double gc_pl_dc =
        cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_c);
    const double gc_pl_dr =
        cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_r);
    const double echo_mean = mean_radar_interference(cfg);
    const double noise = cfg.noise_power();
    const double m = static_cast<double>(cfg.fading.m);
    const double P_c = cfg.powers.P_c;
    const double P_r = cfg.powers.P_r;
    const double g_sic = cfg.thresholds.gamma_sic;

    DerivedConstants k;
    k.omega_c = m * (echo_mean + noise) / (P_c * gc_pl_dc);
    k.omega_r = m * (echo_mean + noise) / (P_r * gc_pl_dr);
    k.a1 = echo_mean / gc_pl_dc;
    k.a2 = noise / gc_pl_dc;
    k.a3 = std::pow(cfg.geometry.d_r, -cfg.geometry.alpha_c) /
           std::pow(cfg.geometry.d_c, -cfg.geometry.alpha_c);
    k.a4 = echo_mean / gc_pl_dr;
    k.a5 = noise / gc_pl_dr;
    k.b1 = k.a4;
    k.b2 = k.a5;
    k.b3 = 1.0 / k.a3;
    k.lambda1 = m * (k.a1 + k.a2) / P_c;
    k.lambda2 = m * (k.a4 + k.a5) / P_r * (g_sic * k.a3 * P_r / P_c + 1.0);
    k.lambda3 = m * (k.b1 + k.b2) / P_r;
    k.lambda4 = m * (k.a1 + k.a2) / P_c * (g_sic * P_c * k.b3 / P_r + 1.0);
    k.lambda5 = m * g_sic * (k.b1 + k.b2) / P_r;

    const double beta_b = cfg.bandwidth.beta_semi * cfg.bandwidth.total_hz;
    const double two_t_beta_b = 2.0 * cfg.radar.pulse_duration * beta_b;
    // echo_mean carries the d_r^-alpha_r path loss; strip it so the product
    // CDF argument d_r^alpha_r * z / xi_r1 is well-typed.
    k.xi_r1 = two_t_beta_b * echo_mean *
              std::pow(cfg.geometry.d_r, cfg.geometry.alpha_r) / noise;
    return k;
}

double echo_power_gain(const SystemConfig& cfg, const FadingSample& fading) {
    const double beta_b = cfg.bandwidth.beta_semi * cfg.bandwidth.total_hz;
    return fading.h_rd_sq * fading.h_ru_sq * cfg.radar.gamma_sq * beta_b * beta_b *
           cfg.radar.sigma_tau_sq;
}

double sinr_oma(const SystemConfig& cfg, User user, const FadingSample& fading) {
    const ReceivedPowers p = received_powers(cfg);
    const double signal = (user == User::Comm) ? p.comm_at_dc * fading.h_c_sq
                                               : p.comm_at_dr * fading.h_r_sq;
    const double echo = cfg.powers.P_bs * cfg.powers.G_r *
                        pathloss_radar(cfg.geometry, cfg.radar, cfg.geometry.d_r) *
                        echo_power_gain(cfg, fading);
    return signal / (echo + p.noise);
}

double sinr_noma(const SystemConfig& cfg, Scenario scenario, User user, SicStage stage,
                 const FadingSample& fading) {
    if (scenario != Scenario::NomaSemiI && scenario != Scenario::NomaSemiII)
        throw std::invalid_argument("sinr_noma: scenario must be one of the superposed modes");
    const ReceivedPowers p = received_powers(cfg);
    const double s_c = p.comm_at_dc * fading.h_c_sq;
    const double s_r = p.comm_at_dr * fading.h_r_sq;
    const double echo = cfg.powers.P_bs * cfg.powers.G_r *
                        pathloss_radar(cfg.geometry, cfg.radar, cfg.geometry.d_r) *
                        echo_power_gain(cfg, fading);

    if (scenario == Scenario::NomaSemiI && user == User::Comm && stage == SicStage::PreSic)
        return s_c / (s_r + echo + p.noise);
    if (scenario == Scenario::NomaSemiI && user == User::Radar && stage == SicStage::PostSic)
        return s_r / (cfg.powers.varsigma_c * s_c + echo + p.noise);
    if (scenario == Scenario::NomaSemiII && user == User::Radar && stage == SicStage::PreSic)
        return s_r / (s_c + echo + p.noise);
    if (scenario == Scenario::NomaSemiII && user == User::Comm && stage == SicStage::PostSic)
        return s_c / (cfg.powers.varsigma_r * s_r + echo + p.noise);
    throw std::invalid_argument("sinr_noma: invalid (scenario, user, stage) combination");
}

double snr_radar_echo(const SystemConfig& cfg, const FadingSample& fading) {
    if (cfg.bandwidth.beta_semi <= 0.0)
        throw std::domain_error("snr_radar_echo: beta_semi = 0 leaves no shared band");
    const ReceivedPowers p = received_powers(cfg);
    const double echo = cfg.powers.P_bs * cfg.powers.G_r *
                        pathloss_radar(cfg.geometry, cfg.radar, cfg.geometry.d_r) *
                        echo_power_gain(cfg, fading);
    const double residual = cfg.powers.varsigma_c * p.comm_at_dc * fading.h_c_sq +
                            cfg.powers.varsigma_r * p.comm_at_dr * fading.h_r_sq;
    return echo / (residual + p.noise);
}

} // namespace semiisac
