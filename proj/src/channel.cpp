#include "semiisac/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace semiisac {

double pathloss_comm(const LinkGeometry& geom, double d) {
    if (!(d >= 1.0)) throw std::domain_error("pathloss_comm: requires d >= 1 m");
    const double intercept = std::pow(kLightSpeed / (4.0 * M_PI * geom.f_c), 2.0);
    return intercept * std::pow(d, -geom.alpha_c);
}

double pathloss_radar(const LinkGeometry& geom, const RadarParams& radar, double d) {
    if (!(d >= 1.0)) throw std::domain_error("pathloss_radar: requires d >= 1 m");
    const double lambda = geom.wavelength();
    const double four_pi = 4.0 * M_PI;
    const double intercept = radar.sigma_rcs * lambda * lambda / (four_pi * four_pi * four_pi);
    return intercept * std::pow(d, -geom.alpha_r);
}

double mean_radar_interference(const SystemConfig& cfg) {
    const double beta_b = cfg.bandwidth.beta_semi * cfg.bandwidth.total_hz;
    return cfg.powers.P_bs * cfg.powers.G_r *
           pathloss_radar(cfg.geometry, cfg.radar, cfg.geometry.d_r) * cfg.radar.gamma_sq *
           beta_b * beta_b * cfg.radar.sigma_tau_sq;
}

double product_channel_pdf(int m, double z) {
    if (m < 1) throw std::domain_error("product_channel_pdf: requires m >= 1");
    if (!(z > 0.0)) throw std::domain_error("product_channel_pdf: requires z > 0");
    const double md = static_cast<double>(m);
    const double log_norm =
        std::log(2.0) + 2.0 * md * std::log(md) - 2.0 * specfun::ln_gamma(md);
    const double k0 = specfun::bessel_k0(2.0 * md * std::sqrt(z));
    if (k0 == 0.0) return 0.0;
    return std::exp(log_norm + (md - 1.0) * std::log(z) + std::log(k0));
}

double product_channel_cdf(int m, double x, const specfun::QuadratureSettings& settings) {
    return specfun::meijer_cdf_product_gamma(m, x, settings);
}

double sample_nakagami_power(int m, RngStream& stream) {
    if (m < 1) throw std::domain_error("sample_nakagami_power: requires m >= 1");
    return stream.gamma(static_cast<double>(m)) / static_cast<double>(m);
}

FadingSample sample_fading(int m, RngStream& stream) {
    FadingSample s;
    s.h_c_sq = sample_nakagami_power(m, stream);
    s.h_r_sq = sample_nakagami_power(m, stream);
    s.h_rd_sq = sample_nakagami_power(m, stream);
    s.h_ru_sq = sample_nakagami_power(m, stream);
    return s;
}

} // namespace semiisac
