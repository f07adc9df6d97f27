#include "semiisac/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace semiisac {

using specfun::QuadratureSettings;

std::string to_string(Method m) {
    switch (m) {
        case Method::Analytic: return "analytic";
        case Method::Asymptotic: return "asymptotic";
        case Method::Quadrature: return "quadrature";
        case Method::MonteCarlo: return "montecarlo";
    }
    return "?";
}

std::string to_string(Unit u) {
    switch (u) {
        case Unit::Probability: return "probability";
        case Unit::BitsPerChannelUse: return "bpcu";
        case Unit::BitsPerSecond: return "bits/s";
        case Unit::NatsPerLnPower: return "nats/ln-power";
        case Unit::Dimensionless: return "dimensionless";
    }
    return "?";
}

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kEulerGamma = 0.57721566490153286;

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r;
}

double clamp_probability(double p) {
    if (p < 0.0 && p > -1e-12) return 0.0;
    if (p > 1.0 && p < 1.0 + 1e-12) return 1.0;
    return p;
}

MetricResult probability_result(double p, Method method) {
    MetricResult r;
    r.value = p;
    r.unit = Unit::Probability;
    r.method = method;
    r.out_of_range = (p < 0.0 || p > 1.0);
    return r;
}

// Everything the superposed-access closed forms need about one band.
// a12/a45 normalize mean interference-plus-noise by the near/far receive
// gain; a3/b3 are the geometric path ratios.
struct NomaConsts {
    int m = 1;
    double P_c = 0.0, P_r = 0.0;
    double gamma_sic = 0.0;
    double a12 = 0.0; // (echo + noise) over the transmitter's receive gain
    double a45 = 0.0; // (echo + noise) over the radar target's receive gain
    double a3 = 1.0;  // d_r^-ac / d_c^-ac
    double b3 = 1.0;  // inverse of a3
};

NomaConsts shared_band_consts(const SystemConfig& cfg) {
    const DerivedConstants k = derive_constants(cfg);
    NomaConsts c;
    c.m = cfg.fading.m;
    c.P_c = cfg.powers.P_c;
    c.P_r = cfg.powers.P_r;
    c.gamma_sic = cfg.thresholds.gamma_sic;
    c.a12 = k.a1 + k.a2;
    c.a45 = k.a4 + k.a5;
    c.a3 = k.a3;
    c.b3 = k.b3;
    return c;
}

// Echo-free variant with the communication-only band's noise floor.
NomaConsts comm_band_consts(const SystemConfig& cfg) {
    const double noise_w = cfg.noise.k_boltzmann * cfg.noise.temperature_k *
                           cfg.bandwidth.epsilon_semi * cfg.bandwidth.total_hz;
    NomaConsts c;
    c.m = cfg.fading.m;
    c.P_c = cfg.powers.P_c;
    c.P_r = cfg.powers.P_r;
    c.gamma_sic = cfg.thresholds.gamma_sic;
    c.a12 = noise_w /
            (cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_c));
    c.a45 = noise_w /
            (cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_r));
    c.a3 = std::pow(cfg.geometry.d_r, -cfg.geometry.alpha_c) /
           std::pow(cfg.geometry.d_c, -cfg.geometry.alpha_c);
    c.b3 = 1.0 / c.a3;
    return c;
}

// Success probability of the near transmitter in scenario I (detected
// against the other user's signal, the mean echo and noise).
double survival_near_comm(const NomaConsts& c, double gamma_th) {
    if (gamma_th == 0.0) return 1.0;
    const double m = c.m;
    const double pref = std::exp(-m * gamma_th * c.a12 / c.P_c);
    const double ratio = gamma_th * c.a3 * c.P_r / c.P_c;
    double sum = 0.0;
    for (int p = 0; p < c.m; ++p) {
        for (int r = 0; r <= p; ++r) {
            sum += binom(p, r) * std::pow(m, r) * std::pow(gamma_th, p) *
                   std::tgamma(m + p - r) * std::pow(c.a12, r) *
                   std::pow(c.a3 * c.P_r, p - r) /
                   (std::tgamma(m) * factorial(p) * std::pow(c.P_c, p) *
                    std::pow(1.0 + ratio, m + p - r));
        }
    }
    return pref * sum;
}

// Joint success of the far radar target in scenario I: the near user's
// cancellation stage must clear gamma_sic and the target's own SINR must
// clear gamma_th.
double survival_far_radar(const NomaConsts& c, double gamma_th, double gamma_sic) {
    const double m = c.m;
    const double ratio = gamma_sic * c.a3 * c.P_r / c.P_c;
    const double scale = gamma_th * m * c.a45 / c.P_r * (1.0 + ratio);
    const double pref = std::exp(-m * gamma_sic * c.a12 / c.P_c);
    double sum = 0.0;
    for (int p = 0; p < c.m; ++p) {
        for (int r = 0; r <= p; ++r) {
            sum += binom(p, r) * std::pow(c.a12, p - r) * std::pow(c.a3 * c.P_r, r) /
                   (std::tgamma(m) * std::pow(m, r) * factorial(p)) *
                   std::pow(m * gamma_sic / c.P_c, p) *
                   std::pow(1.0 + ratio, -(r + m)) *
                   specfun::reg_upper_gamma(r + m, scale) * std::tgamma(r + m);
        }
    }
    return pref * sum;
}

// Success of the near radar target in scenario II.
double survival_near_radar(const NomaConsts& c, double gamma_th) {
    if (gamma_th == 0.0) return 1.0;
    const double m = c.m;
    const double ratio = gamma_th * c.P_c * c.b3 / c.P_r;
    const double pref = std::exp(-m * gamma_th * c.a45 / c.P_r);
    double sum = 0.0;
    for (int p = 0; p < c.m; ++p) {
        for (int r = 0; r <= p; ++r) {
            sum += binom(p, r) * std::tgamma(m + r) /
                   (std::tgamma(m) * std::pow(m, r) * factorial(p)) *
                   std::pow(m * gamma_th / c.P_r, p) * std::pow(c.a45, p - r) *
                   std::pow(c.P_c * c.b3, r) * std::pow(1.0 + ratio, -(m + r));
        }
    }
    return pref * sum;
}

// Joint success of the far transmitter in scenario II.
double survival_far_comm(const NomaConsts& c, double gamma_th, double gamma_sic) {
    const double m = c.m;
    const double ratio = gamma_sic * c.P_c * c.b3 / c.P_r;
    const double scale = gamma_th * m / c.P_c * c.a12 * (1.0 + ratio);
    const double pref = std::exp(-m * gamma_sic * c.a45 / c.P_r);
    double sum = 0.0;
    for (int p = 0; p < c.m; ++p) {
        for (int r = 0; r <= p; ++r) {
            sum += binom(p, r) * std::pow(m * gamma_sic / c.P_r, p) / factorial(p) *
                   std::pow(c.a45, p - r) * std::pow(c.P_c * c.b3, r) *
                   std::pow(1.0 + ratio, -(m + r)) *
                   specfun::reg_upper_gamma(m + r, scale) * std::tgamma(m + r) /
                   (std::tgamma(m) * std::pow(m, r));
        }
    }
    return pref * sum;
}

double noma_survival(const NomaConsts& c, Scenario scenario, User user, double gamma_th,
                     double gamma_sic) {
    if (gamma_th < 0.0) throw std::domain_error("outage: requires gamma_th >= 0");
    if (scenario == Scenario::NomaSemiI) {
        if (user == User::Comm) return survival_near_comm(c, gamma_th);
        return survival_far_radar(c, gamma_th, gamma_sic);
    }
    if (scenario == Scenario::NomaSemiII) {
        if (user == User::Radar) return survival_near_radar(c, gamma_th);
        return survival_far_comm(c, gamma_th, gamma_sic);
    }
    throw std::invalid_argument("op_noma: scenario must be one of the superposed modes");
}

double oma_rate_from_omega(int m, double omega) {
    double sum = 0.0;
    for (int k = 0; k < m; ++k) sum += specfun::exp_integral_en_scaled(1 + k, omega);
    return sum / (2.0 * kLn2);
}

} // namespace

double BerParams::a_ber() const { return 2.0 / std::log2(static_cast<double>(psk_order)); }

double BerParams::b_ber() const {
    const double s = std::sin(M_PI / psk_order);
    return 2.0 * std::log2(static_cast<double>(psk_order)) * (standard_mapping ? s * s : s);
}

MetricResult op_oma(const SystemConfig& cfg, User user, double gamma_th) {
    if (gamma_th < 0.0) throw std::domain_error("op_oma: requires gamma_th >= 0");
    const DerivedConstants k = derive_constants(cfg);
    const double p = specfun::reg_lower_gamma(cfg.fading.m, k.omega(user) * gamma_th);
    return probability_result(clamp_probability(p), Method::Analytic);
}

MetricResult rate_oma(const SystemConfig& cfg, User user) {
    const DerivedConstants k = derive_constants(cfg);
    MetricResult r;
    r.value = oma_rate_from_omega(cfg.fading.m, k.omega(user));
    r.unit = Unit::BitsPerChannelUse;
    r.method = Method::Analytic;
    return r;
}

MetricResult op_noma(const SystemConfig& cfg, Scenario scenario, User user, double gamma_th,
                     double gamma_sic) {
    const NomaConsts c = shared_band_consts(cfg);
    const double p = 1.0 - noma_survival(c, scenario, user, gamma_th, gamma_sic);
    return probability_result(clamp_probability(p), Method::Analytic);
}

double rate_integral_from_outage(const std::function<double(double)>& survival,
                                 double* tail_bound) {
    // Doubling search for a finite upper limit; the integrand has no closed
    // support so the remainder is bounded analytically instead.
    double gmax = 1.0;
    double s_end = survival(gmax);
    while (s_end >= 1e-10 && gmax < 1e15) {
        gmax *= 2.0;
        s_end = survival(gmax);
    }
    QuadratureSettings settings;
    settings.rel_tol = 1e-9;
    settings.abs_tol = 1e-13;
    settings.max_subdivisions = 400;
    const double integral = specfun::integrate_finite(
        [&](double g) { return survival(g) / (1.0 + g); }, 0.0, gmax, settings);
    double tail = 0.0;
    if (s_end > 0.0) {
        const double s_mid = survival(0.9 * gmax);
        double decay = 0.0;
        if (s_mid > s_end && s_end > 0.0)
            decay = std::log(s_mid / s_end) / (0.1 * gmax);
        if (decay <= 0.0) decay = 1.0 / gmax;
        tail = s_end / ((1.0 + gmax) * decay);
    }
    if (tail_bound != nullptr) *tail_bound = tail;
    return integral;
}

MetricResult rate_noma(const SystemConfig& cfg, Scenario scenario, User user) {
    const NomaConsts c = shared_band_consts(cfg);
    const double gamma_sic = cfg.thresholds.gamma_sic;
    double tail = 0.0;
    const double integral = rate_integral_from_outage(
        [&](double g) { return noma_survival(c, scenario, user, g, gamma_sic); }, &tail);
    MetricResult r;
    r.value = integral / kLn2;
    r.unit = Unit::BitsPerChannelUse;
    r.method = Method::Quadrature;
    r.ci_halfwidth = tail / kLn2;
    return r;
}

MetricResult asymptotic_op(const SystemConfig& cfg, Scenario scenario, User user,
                           double gamma_th, double gamma_sic) {
    if (gamma_th < 0.0) throw std::domain_error("asymptotic_op: requires gamma_th >= 0");
    const NomaConsts c = shared_band_consts(cfg);
    const double m = c.m;
    const double gm = std::tgamma(m);
    const double gm1 = std::tgamma(m + 1.0);
    double value = 0.0;

    auto tail_sum = [&](double lead, double coeff_near, double coeff_far, double floor_arg) {
        // lead * sum_r C(m,r) coeff_near^{m-r} coeff_far^r Gamma(m+r, floor) /
        // (Gamma(m+1) Gamma(m) m^r); floor_arg = 0 collapses to the complete
        // gamma.
        double sum = 0.0;
        for (int r = 0; r <= c.m; ++r) {
            const double g = specfun::reg_upper_gamma(m + r, floor_arg) * std::tgamma(m + r);
            sum += binom(c.m, r) * std::pow(coeff_near, c.m - r) * std::pow(coeff_far, r) * g /
                   (gm1 * gm * std::pow(m, r));
        }
        return lead * sum;
    };

    if (scenario == Scenario::NomaSemiI && user == User::Comm) {
        value = tail_sum(std::pow(m * gamma_th / c.P_c, m), c.a12, c.P_r * c.a3, 0.0);
    } else if (scenario == Scenario::NomaSemiI && user == User::Radar) {
        const double floor_arg = m * gamma_th * c.a45 / c.P_r;
        value = specfun::reg_lower_gamma(m, floor_arg) +
                tail_sum(std::pow(m * gamma_sic / c.P_c, m), c.a12, c.a3 * c.P_r, floor_arg);
    } else if (scenario == Scenario::NomaSemiII && user == User::Comm) {
        const double floor_arg = m * gamma_th * c.a12 / c.P_c;
        value = specfun::reg_lower_gamma(m, floor_arg) +
                tail_sum(std::pow(m * gamma_sic / c.P_r, m), c.a45, c.P_c * c.b3, floor_arg);
    } else if (scenario == Scenario::NomaSemiII && user == User::Radar) {
        value = tail_sum(std::pow(m * gamma_th / c.P_r, m), c.a45, c.P_c * c.b3, 0.0);
    } else {
        throw std::invalid_argument("asymptotic_op: scenario must be a superposed mode");
    }
    return probability_result(value, Method::Asymptotic);
}

int diversity_order(const SystemConfig& cfg, Scenario scenario, User user) {
    if (scenario == Scenario::NomaSemiI)
        return user == User::Comm ? cfg.fading.m : 0;
    if (scenario == Scenario::NomaSemiII)
        return user == User::Radar ? cfg.fading.m : 0;
    throw std::invalid_argument("diversity_order: scenario must be a superposed mode");
}

MetricResult reir_general(const SystemConfig& cfg, const QuadratureSettings& settings) {
    MetricResult r;
    r.unit = Unit::BitsPerSecond;
    r.method = Method::Quadrature;
    if (cfg.bandwidth.beta_semi <= 0.0) return r; // no shared band, rate is zero
    const DerivedConstants k = derive_constants(cfg);
    const double c = std::pow(cfg.geometry.d_r, cfg.geometry.alpha_r) / k.xi_r1;
    QuadratureSettings inner;
    const double integral = specfun::integrate_semi_infinite(
        [&](double z) {
            return specfun::product_gamma_survival(cfg.fading.m, c * z, inner) / (1.0 + z);
        },
        settings);
    r.value = cfg.radar.duty_cycle / (2.0 * cfg.radar.pulse_duration * kLn2) * integral;
    return r;
}

MetricResult reir_rayleigh(const SystemConfig& cfg) {
    MetricResult r;
    r.unit = Unit::BitsPerSecond;
    r.method = Method::Quadrature;
    if (cfg.bandwidth.beta_semi <= 0.0) return r;
    const DerivedConstants k = derive_constants(cfg);
    const double c = std::pow(cfg.geometry.d_r, cfg.geometry.alpha_r) / k.xi_r1;
    r.value = cfg.radar.duty_cycle / (2.0 * cfg.radar.pulse_duration * kLn2) *
              specfun::meijer_rayleigh_reir_kernel(c);
    return r;
}

MetricResult reir_asymptotic(const SystemConfig& cfg) {
    if (cfg.fading.m < 3)
        throw std::domain_error(
            "reir_asymptotic: unsupported below m = 3 (the expansion needs Gamma(m-2)); "
            "use the general quadrature rate instead");
    MetricResult r;
    r.unit = Unit::BitsPerSecond;
    r.method = Method::Asymptotic;
    if (cfg.bandwidth.beta_semi <= 0.0) return r;

    const DerivedConstants k = derive_constants(cfg);
    const int m = cfg.fading.m;
    const double md = m;
    const double A = md * std::pow(cfg.geometry.d_r, cfg.geometry.alpha_r) / k.xi_r1;
    const double ln_ma = std::log(md * A);

    // Small-argument expansion of E_1 under the fading average, with the
    // (1 + A/x) weight of the leading term kept.
    const double i6 = A * std::tgamma(md - 1.0) / std::pow(md, md - 1.0) -
                      std::tgamma(md) / std::pow(md, md) *
                          (ln_ma + kEulerGamma - specfun::digamma(md));
    const double i7 =
        A * A * std::tgamma(md - 2.0) / std::pow(md, md - 2.0) -
        A * std::tgamma(md - 1.0) / std::pow(md, md - 1.0) *
            (ln_ma + kEulerGamma - specfun::digamma(md - 1.0));
    double total = i6 + i7;

    // Higher-order exponential-integral terms, expansion truncated at the
    // largest fading moment that stays integrable.
    for (int kk = 1; kk < m; ++kk) {
        const double sign_k = (kk % 2 == 0) ? 1.0 : -1.0;
        const double common = sign_k * std::pow(A, kk) * std::tgamma(md - kk) /
                              (factorial(kk) * std::pow(md, md - kk));
        double i5 = common * (specfun::digamma(kk + 1.0) + specfun::digamma(md - kk) - ln_ma);
        for (int q = 0; q < m; ++q) {
            if (q == kk) continue;
            const double sign_q = (q % 2 == 0) ? 1.0 : -1.0;
            i5 -= sign_q * std::pow(A, q) * std::tgamma(md - q) /
                  (factorial(q) * (q - kk) * std::pow(md, md - q));
        }
        total += i5;
    }

    r.value = cfg.radar.duty_cycle * std::pow(md, md) /
              (2.0 * cfg.radar.pulse_duration * kLn2 * std::tgamma(md)) * total;
    return r;
}

double high_snr_slope(const RadarParams& radar) {
    if (!(radar.duty_cycle > 0.0) || !(radar.pulse_duration > 0.0))
        throw std::domain_error("high_snr_slope: requires duty_cycle > 0 and pulse_duration > 0");
    return radar.duty_cycle / (2.0 * radar.pulse_duration * kLn2);
}

double ber_mpsk(const BerParams& params, double gamma) {
    if (params.psk_order < 2 || (params.psk_order & (params.psk_order - 1)) != 0)
        throw std::domain_error("ber_mpsk: PSK order must be a power of two, >= 2");
    if (!(gamma >= 0.0)) throw std::domain_error("ber_mpsk: requires gamma >= 0");
    return params.a_ber() * specfun::gaussian_q(std::sqrt(params.b_ber() * gamma));
}

namespace {

double noma_band_sum_rate(const NomaConsts& c, Scenario scenario, double gamma_sic) {
    const User near = (scenario == Scenario::NomaSemiI) ? User::Comm : User::Radar;
    const User far = (scenario == Scenario::NomaSemiI) ? User::Radar : User::Comm;
    double sum = 0.0;
    for (User u : {near, far}) {
        sum += rate_integral_from_outage(
                   [&](double g) { return noma_survival(c, scenario, u, g, gamma_sic); },
                   nullptr) /
               kLn2;
    }
    return sum;
}

double oma_band_sum_rate(const SystemConfig& cfg, double echo_mean, double noise) {
    const double m = cfg.fading.m;
    double sum = 0.0;
    const double gain_c =
        cfg.powers.P_c * cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_c);
    const double gain_r =
        cfg.powers.P_r * cfg.powers.G_c * pathloss_comm(cfg.geometry, cfg.geometry.d_r);
    sum += oma_rate_from_omega(cfg.fading.m, m * (echo_mean + noise) / gain_c);
    sum += oma_rate_from_omega(cfg.fading.m, m * (echo_mean + noise) / gain_r);
    return sum;
}

} // namespace

MetricResult capacity_aggregate(const SystemConfig& cfg, Scenario mode) {
    MetricResult r;
    r.unit = Unit::BitsPerChannelUse;
    r.method = Method::Quadrature;

    SystemConfig c = cfg;
    if (mode == Scenario::FdIsac) {
        c.bandwidth.alpha_semi = 0.0;
        c.bandwidth.beta_semi = 1.0;
        c.bandwidth.epsilon_semi = 0.0;
    }
    const double beta = c.bandwidth.beta_semi;
    const double eps = c.bandwidth.epsilon_semi;
    const double kT = c.noise.k_boltzmann * c.noise.temperature_k;
    double total = 0.0;

    if (beta > 0.0) {
        const double shared_noise = kT * beta * c.bandwidth.total_hz;
        const double echo_mean = mean_radar_interference(c);
        if (mode == Scenario::NomaSemiI || mode == Scenario::NomaSemiII) {
            total += beta * noma_band_sum_rate(shared_band_consts(c), mode,
                                               c.thresholds.gamma_sic);
        } else {
            total += beta * oma_band_sum_rate(c, echo_mean, shared_noise);
        }
        total += reir_general(c).value / c.bandwidth.total_hz;
    }
    if (eps > 0.0) {
        const double comm_noise = kT * eps * c.bandwidth.total_hz;
        if (mode == Scenario::NomaSemiI || mode == Scenario::NomaSemiII) {
            total += eps * noma_band_sum_rate(comm_band_consts(c), mode,
                                              c.thresholds.gamma_sic);
        } else {
            total += eps * oma_band_sum_rate(c, 0.0, comm_noise);
        }
    }
    r.value = total;
    return r;
}

SeriesResult rate_noma_series(const SystemConfig& cfg, Scenario scenario, User user,
                              int max_terms) {
    const bool near_comm = (scenario == Scenario::NomaSemiI && user == User::Comm);
    const bool near_radar = (scenario == Scenario::NomaSemiII && user == User::Radar);
    if (!near_comm && !near_radar)
        throw std::invalid_argument(
            "rate_noma_series: the binomial series applies to the pre-cancellation user");
    const NomaConsts c = shared_band_consts(cfg);
    const DerivedConstants k = derive_constants(cfg);
    const int m = c.m;

    const double lambda = near_comm ? k.lambda1 : k.lambda3;
    const double power_ratio = near_comm ? c.a3 * c.P_r / c.P_c : c.P_c * c.b3 / c.P_r;
    const double log_ratio = std::log(power_ratio);
    const double log_lambda = std::log(lambda);

    SeriesResult out;
    double sum = 0.0;
    double worst_truncation = 0.0;
    bool all_converged = true;
    int max_used = 0;

    for (int p = 0; p < m; ++p) {
        for (int r = 0; r <= p; ++r) {
            double coeff;
            int binom_n; // upper constant of the negative-binomial weights
            if (near_comm) {
                coeff = binom(p, r) * std::pow(static_cast<double>(m), r) *
                        std::pow(c.a12, r) * std::pow(c.a3 * c.P_r, p - r) *
                        std::tgamma(static_cast<double>(m + p - r)) /
                        (std::tgamma(static_cast<double>(m)) * factorial(p) *
                         std::pow(c.P_c, p));
                binom_n = m + p - r;
            } else {
                coeff = binom(p, r) * std::tgamma(static_cast<double>(m + r)) *
                        std::pow(c.P_c * c.b3, r) * std::pow(lambda, p) /
                        (std::tgamma(static_cast<double>(m)) *
                         std::pow(static_cast<double>(m), r) * factorial(p) *
                         std::pow(c.a45, r));
                binom_n = m + r;
            }

            // inner asymptotic series over the binomial expansion index;
            // truncate at the smallest term.
            double inner = 0.0;
            double prev_mag = std::numeric_limits<double>::infinity();
            double truncation = 0.0;
            int used = 0;
            for (int kk = 0; kk <= max_terms; ++kk) {
                double log_mag = std::log(binom(binom_n + kk - 1, kk)) + kk * log_ratio +
                                 std::lgamma(static_cast<double>(p + kk + 1)) -
                                 (p + kk) * log_lambda;
                const double en = specfun::exp_integral_en_scaled(1 + p + kk, lambda);
                const double mag = std::exp(log_mag) * en;
                if (!std::isfinite(mag)) {
                    truncation = prev_mag;
                    all_converged = false;
                    break;
                }
                if (kk > 0 && mag > prev_mag) {
                    truncation = mag; // series turned; asymptotic stopping point
                    break;
                }
                inner += ((kk % 2 == 0) ? 1.0 : -1.0) * mag;
                prev_mag = mag;
                used = kk + 1;
                if (mag < 1e-16 * std::abs(inner)) {
                    truncation = mag;
                    break;
                }
                if (kk == max_terms) truncation = mag;
            }
            max_used = std::max(max_used, used);
            sum += coeff * inner;
            worst_truncation += coeff * truncation;
        }
    }

    out.value = sum / kLn2;
    out.truncation = std::abs(worst_truncation) / kLn2;
    out.terms_used = max_used;
    out.converged = all_converged && out.truncation <= 0.005 * std::abs(out.value);
    return out;
}

double rate_noma_closed_form(const SystemConfig& cfg, Scenario scenario, User user) {
    const bool far_radar = (scenario == Scenario::NomaSemiI && user == User::Radar);
    const bool far_comm = (scenario == Scenario::NomaSemiII && user == User::Comm);
    if (!far_radar && !far_comm)
        throw std::invalid_argument(
            "rate_noma_closed_form: the finite sum applies to the post-cancellation user");
    const NomaConsts c = shared_band_consts(cfg);
    const DerivedConstants kc = derive_constants(cfg);
    const int m = c.m;
    const double md = m;
    const double gamma_sic = cfg.thresholds.gamma_sic;

    double sum = 0.0;
    if (far_radar) {
        const double ratio = gamma_sic * c.a3 * c.P_r / c.P_c;
        const double pref = std::exp(-kc.lambda1 * gamma_sic);
        for (int p = 0; p < m; ++p) {
            for (int r = 0; r <= p; ++r) {
                double en_sum = 0.0;
                for (int kk = 0; kk < r + m; ++kk)
                    en_sum += specfun::exp_integral_en_scaled(1 + kk, kc.lambda2);
                sum += binom(p, r) * std::pow(c.a12, p - r) * std::pow(c.a3 * c.P_r, r) /
                       (std::tgamma(md) * std::pow(md, r) * factorial(p)) *
                       std::pow(md * gamma_sic / c.P_c, p) * pref *
                       std::pow(1.0 + ratio, -(r + md)) *
                       std::tgamma(static_cast<double>(r + m)) * en_sum;
            }
        }
    } else {
        const double ratio = gamma_sic * c.P_c * c.b3 / c.P_r;
        const double pref = std::exp(-kc.lambda5);
        for (int p = 0; p < m; ++p) {
            for (int r = 0; r <= p; ++r) {
                double en_sum = 0.0;
                for (int kk = 0; kk < m + r; ++kk)
                    en_sum += specfun::exp_integral_en_scaled(1 + kk, kc.lambda4);
                sum += binom(p, r) * std::pow(c.P_c * c.b3, r) * std::pow(kc.lambda5, p) *
                       pref /
                       (factorial(p) * std::tgamma(md) * std::pow(md, r) *
                        std::pow(c.a45, r)) *
                       std::pow(1.0 + ratio, -(md + r)) *
                       std::tgamma(static_cast<double>(m + r)) * en_sum;
            }
        }
    }
    return sum / kLn2;
}

} // namespace semiisac
