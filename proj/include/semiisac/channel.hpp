#ifndef SEMIISAC_CHANNEL_HPP
#define SEMIISAC_CHANNEL_HPP

#include "semiisac/config.hpp"
#include "semiisac/rng.hpp"
#include "semiisac/specfun.hpp"

namespace semiisac {

/// One draw of all small-scale channel power gains (unit mean each).
struct FadingSample {
    double h_c_sq = 1.0;  // transmitter uplink
    double h_r_sq = 1.0;  // radar target uplink (communication function)
    double h_rd_sq = 1.0; // BS -> target leg of the echo
    double h_ru_sq = 1.0; // target -> BS leg of the echo
};

/// Communication path gain C_c * d^-alpha_c with the 1 m reference intercept.
double pathloss_comm(const LinkGeometry& geom, double d);

/// Radar-echo path gain C_r * d^-alpha_r; C_r folds in the cross-section.
double pathloss_radar(const LinkGeometry& geom, const RadarParams& radar, double d);

/// Mean power of the residual-echo interference (unit-mean fading averaged
/// out): P_bs * G_r * pathloss_radar(d_r) * gamma^2 beta^2 B^2 sigma_tau^2.
double mean_radar_interference(const SystemConfig& cfg);

/// Density of the product of the two echo-leg power gains:
/// f(z) = 2 m^{2m} / Gamma(m)^2 * z^{m-1} K0(2 m sqrt(z)).
double product_channel_pdf(int m, double z);

/// CDF of the same product; delegates to the kernel evaluator.
double product_channel_cdf(int m, double x,
                           const specfun::QuadratureSettings& settings = {});

/// Unit-mean Nakagami-m power gain, i.e. Gamma(m, 1/m).
double sample_nakagami_power(int m, RngStream& stream);

/// All four gains of one Monte Carlo draw.
FadingSample sample_fading(int m, RngStream& stream);

} // namespace semiisac

#endif
