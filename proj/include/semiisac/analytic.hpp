#ifndef SEMIISAC_ANALYTIC_HPP
#define SEMIISAC_ANALYTIC_HPP

#include <optional>
#include <string>

#include "semiisac/scenario.hpp"
#include "semiisac/specfun.hpp"

namespace semiisac {

enum class Method { Analytic, Asymptotic, Quadrature, MonteCarlo };
enum class Unit { Probability, BitsPerChannelUse, BitsPerSecond, NatsPerLnPower, Dimensionless };

std::string to_string(Method m);
std::string to_string(Unit u);

/// A metric value with its unit, the evaluation route that produced it and,
/// for stochastic estimates, a confidence half-width. Probability-valued
/// asymptotics are reported raw: out_of_range flags values outside [0,1]
/// instead of clamping them.
struct MetricResult {
    double value = 0.0;
    Unit unit = Unit::Dimensionless;
    Method method = Method::Analytic;
    std::optional<double> ci_halfwidth;
    bool out_of_range = false;
};

/// M-PSK error-rate constants: a = 2/log2(M), b = 2 log2(M) sin(pi/M)
/// (standard_mapping substitutes sin^2(pi/M)).
struct BerParams {
    int psk_order = 4;
    bool standard_mapping = false;

    double a_ber() const;
    double b_ber() const;
};

// --- shared-band metrics, orthogonal access ---

/// Outage of user j: P = P(m, omega_j * gamma_th) (regularized lower gamma).
MetricResult op_oma(const SystemConfig& cfg, User user, double gamma_th);

/// Ergodic rate of user j in bits per channel use, exact finite series
/// (1/(2 ln2)) sum_k exp(omega) E_{1+k}(omega).
MetricResult rate_oma(const SystemConfig& cfg, User user);

// --- shared-band metrics, superposed access ---

/// Closed-form outage under perfect cancellation. Far users (Radar in
/// scenario I, Comm in scenario II) count a failed cancellation stage as
/// outage (joint event).
MetricResult op_noma(const SystemConfig& cfg, Scenario scenario, User user, double gamma_th,
                     double gamma_sic);

/// Ergodic rate by quadrature of (1 - OP(g)) / (1 + g) over the closed-form
/// outage. The reported ci_halfwidth is the analytic tail bound beyond the
/// finite integration limit.
MetricResult rate_noma(const SystemConfig& cfg, Scenario scenario, User user);

/// High-power outage expansions (single-term lower-gamma series). Reported
/// unclamped; out_of_range marks values outside [0,1].
MetricResult asymptotic_op(const SystemConfig& cfg, Scenario scenario, User user,
                           double gamma_th, double gamma_sic);

/// Negative high-power log-log outage slope: m for the near user, 0 for the
/// far user. Superposed scenarios only.
int diversity_order(const SystemConfig& cfg, Scenario scenario, User user);

// --- radar-echo metrics ---

/// Ergodic estimation information rate, bits/s, via the survival-function
/// integral over the product-channel distribution. Returns 0 when beta = 0.
MetricResult reir_general(const SystemConfig& cfg,
                          const specfun::QuadratureSettings& settings = {});

/// Rayleigh-fading special case of the same rate (fading order forced to 1).
MetricResult reir_rayleigh(const SystemConfig& cfg);

/// Closed-form high-power expansion of the ergodic estimation rate.
/// Requires integer m >= 3; lower orders throw std::domain_error.
MetricResult reir_asymptotic(const SystemConfig& cfg);

/// Growth of the estimation rate per nat of BS power: delta / (2 T ln2).
double high_snr_slope(const RadarParams& radar);

/// M-PSK bit error rate a * Q(sqrt(b * gamma)) at echo SNR gamma.
double ber_mpsk(const BerParams& params, double gamma);

// --- aggregates & cross-checks ---

/// Total "channel capacity" in bits/s/Hz of the full band: the comm-only
/// and shared sub-bands contribute their user sum rates weighted by the
/// band fractions, plus the estimation rate normalized by B. FdIsac is
/// evaluated at the forced split (0, 1, 0).
MetricResult capacity_aggregate(const SystemConfig& cfg, Scenario mode);

/// Result of the (asymptotic) binomial-series rate evaluation used as an
/// optional cross-check. converged=false means the smallest term was not
/// negligible and the check should be reported as skipped.
struct SeriesResult {
    double value = 0.0;
    bool converged = false;
    int terms_used = 0;
    double truncation = 0.0;
};

/// Binomial-series rates for the pre-cancellation users ((I, Comm) and
/// (II, Radar)); asymptotic series truncated at its smallest term.
SeriesResult rate_noma_series(const SystemConfig& cfg, Scenario scenario, User user,
                              int max_terms = 200);

/// Exact finite-sum rates for the post-cancellation users ((I, Radar) and
/// (II, Comm)).
double rate_noma_closed_form(const SystemConfig& cfg, Scenario scenario, User user);

/// Quadrature of (1 - OP)/(1 + g) for an arbitrary outage function; exposed
/// for oracle-style cross checks. Returns the integral (no 1/ln2 factor)
/// and writes the tail bound if requested.
double rate_integral_from_outage(const std::function<double(double)>& survival,
                                 double* tail_bound = nullptr);

} // namespace semiisac

#endif
