#ifndef SEMIISAC_CONFIG_HPP
#define SEMIISAC_CONFIG_HPP

#include <string>

namespace semiisac {

constexpr double kLightSpeed = 3.0e8;              // m/s
constexpr double kBoltzmann = 1.380649e-23;        // J/K
constexpr double kFlatSpectrumGammaSq = 39.478417604357434 / 12.0; // (2*pi)^2 / 12

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Three-way bandwidth split: radar-only (alpha), shared (beta),
/// communication-only (epsilon). Fractions must sum to one.
struct BandwidthSplit {
    double alpha_semi = 0.0;
    double beta_semi = 0.5;
    double epsilon_semi = 0.5;
    double total_hz = 10e6;

    double radar_only_hz() const { return alpha_semi * total_hz; }
    double isac_hz() const { return beta_semi * total_hz; }
    double comm_only_hz() const { return epsilon_semi * total_hz; }
};

/// Transmit powers (stored in watts; configs accept dBm), antenna gains and
/// residual-interference fractions of the cancellation stages.
struct PowerConfig {
    double P_c = 0.01;
    double P_r = 0.01;
    double P_bs = 0.01;
    double G_c = 1.0;
    double G_r = 1.0;
    double varsigma_c = 0.0; // 0 = perfect cancellation of the transmitter signal
    double varsigma_r = 0.0; // 0 = perfect cancellation of the radar-target signal
};

struct LinkGeometry {
    double d_c = 800.0;   // m, BS to communication transmitter
    double d_r = 1300.0;  // m, BS to radar target
    double alpha_c = 2.5; // communication path-loss exponent
    double alpha_r = 4.5; // radar-echo path-loss exponent
    double f_c = 1.0e9;   // Hz

    double wavelength() const { return kLightSpeed / f_c; }
};

struct RadarParams {
    double duty_cycle = 0.01;
    double pulse_duration = 1.0e-6; // s
    double sigma_rcs = 0.1;         // m^2
    double sigma_tau_sq = 5.0e-8;   // s^2, time-delay fluctuation variance
    double gamma_sq = kFlatSpectrumGammaSq;
};

struct NoiseModel {
    double k_boltzmann = kBoltzmann;
    double temperature_k = 724.0;
};

struct Thresholds {
    double gamma_th = 1.0;     // 2^rate_target - 1
    double gamma_sic = 0.4;
    double gamma_th_oma = 1.0;
};

struct FadingModel {
    int m = 3; // Nakagami shape; analytics require a positive integer
};

struct PskParams {
    int order = 4;
    bool standard_mapping = false; // true substitutes sin^2(pi/M)
};

struct SystemConfig {
    BandwidthSplit bandwidth;
    PowerConfig powers;
    LinkGeometry geometry;
    RadarParams radar;
    NoiseModel noise;
    Thresholds thresholds;
    FadingModel fading;
    PskParams psk;

    /// Noise power over the shared band: k_B * T * beta * B.
    double noise_power() const {
        return noise.k_boltzmann * noise.temperature_k * bandwidth.beta_semi *
               bandwidth.total_hz;
    }

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// The baseline parameterization used throughout the numeric studies
/// (800/1300 m, 10 MHz, 724 K, 10 dBm everywhere, m = 3).
SystemConfig paper_sec6_preset();

/// Parse a config from JSON text. Fields not present keep preset defaults
/// when "preset" names one, otherwise struct defaults.
SystemConfig config_from_json_text(const std::string& text);

/// Load from a file path, or resolve a bare preset name ("paper-sec6").
SystemConfig load_config(const std::string& path_or_preset);

std::string config_to_json_text(const SystemConfig& cfg);

/// Assign a scalar config field addressed by a dotted path such as
/// "powers.P_c_dBm" or "bandwidth.beta_semi". Setting beta_semi keeps
/// alpha fixed and renormalizes epsilon = 1 - alpha - beta.
void set_config_field(SystemConfig& cfg, const std::string& path, double value);

} // namespace semiisac

#endif
