#ifndef SEMIISAC_SCENARIO_HPP
#define SEMIISAC_SCENARIO_HPP

#include <string>

#include "semiisac/channel.hpp"
#include "semiisac/config.hpp"

namespace semiisac {

enum class Scenario {
    FdIsac,     // whole band shared, users on orthogonal blocks
    OmaSemi,    // three-way split, orthogonal users in the shared band
    NomaSemiI,  // near communication transmitter, far radar target
    NomaSemiII, // far communication transmitter, near radar target
};

enum class User { Comm, Radar };

enum class SicStage { PreSic, PostSic };

std::string to_string(Scenario s);
std::string to_string(User u);
Scenario scenario_from_string(const std::string& name);
User user_from_string(const std::string& name);

/// Shorthand constants computed once per config. All the closed forms are
/// written in terms of these. omega_c/omega_r normalize the mean
/// interference-plus-noise by the detected user's received power.
struct DerivedConstants {
    double omega_c = 0.0;
    double omega_r = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0, a5 = 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0, lambda4 = 0.0, lambda5 = 0.0;
    double xi_r1 = 0.0; // deterministic echo-SNR prefactor, d_r^-alpha_r excluded

    double omega(User u) const { return u == User::Comm ? omega_c : omega_r; }
};

/// Throws std::domain_error when beta_semi = 0 (the shared band, and with it
/// every echo-dependent constant, does not exist).
DerivedConstants derive_constants(const SystemConfig& cfg);

/// Random echo power gain |g_r|^2 = h_rd^2 h_ru^2 gamma^2 beta^2 B^2 sigma_tau^2.
double echo_power_gain(const SystemConfig& cfg, const FadingSample& fading);

/// Orthogonal-access SINR of user j in the shared band: own signal over
/// residual echo plus noise.
double sinr_oma(const SystemConfig& cfg, User user, const FadingSample& fading);

/// Superposed-access SINRs. Valid combinations: (I, Comm, PreSic),
/// (I, Radar, PostSic), (II, Radar, PreSic), (II, Comm, PostSic);
/// anything else throws std::invalid_argument. Residual fractions
/// varsigma_c / varsigma_r scale the cancelled signals.
double sinr_noma(const SystemConfig& cfg, Scenario scenario, User user, SicStage stage,
                 const FadingSample& fading);

/// Echo SNR after the last cancellation stage; residual communication
/// signals stay in the denominator under imperfect cancellation.
double snr_radar_echo(const SystemConfig& cfg, const FadingSample& fading);

} // namespace semiisac

#endif
