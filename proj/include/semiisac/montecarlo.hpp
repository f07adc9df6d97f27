#ifndef SEMIISAC_MONTECARLO_HPP
#define SEMIISAC_MONTECARLO_HPP

#include <cstdint>

#include "semiisac/analytic.hpp"
#include "semiisac/scenario.hpp"

namespace semiisac {

/// Sampling controls. The sample index space is partitioned into fixed-size
/// batches; each batch owns a stream derived from (seed, batch index), so
/// estimates are bit-identical for any worker count.
struct McSettings {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 12345;
    std::uint64_t batch_size = 65536;
    double confidence = 0.99;
};

enum class SicModel { Perfect, Imperfect };

/// Empirical outage probability with a Wilson-score confidence half-width.
/// Far users count a failed cancellation stage as outage (joint event).
MetricResult mc_outage(const SystemConfig& cfg, Scenario scenario, User user, double gamma_th,
                       double gamma_sic, const McSettings& settings);

/// Empirical ergodic rate in bits per channel use. Orthogonal access keeps
/// the 1/2 two-user split; far users earn rate only when the cancellation
/// stage succeeds.
MetricResult mc_rate(const SystemConfig& cfg, Scenario scenario, User user,
                     const McSettings& settings);

/// Empirical ergodic estimation information rate, bits/s. Perfect forces
/// both residual fractions to zero; Imperfect uses the config's values.
/// beta = 0 returns 0 without sampling.
MetricResult mc_reir(const SystemConfig& cfg, const McSettings& settings,
                     SicModel sic = SicModel::Imperfect);

/// Sample mean of the residual-echo interference power (watts).
MetricResult mc_mean_interference(const SystemConfig& cfg, const McSettings& settings);

} // namespace semiisac

#endif
