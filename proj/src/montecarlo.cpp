#include "semiisac/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "semiisac/channel.hpp"
#include "semiisac/rng.hpp"
#include "semiisac/specfun.hpp"

namespace semiisac {

namespace {

// Single-pass mean/variance; merged pairwise in batch order (Chan et al.).
struct Accumulator {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const Accumulator& other) {
        if (other.n == 0) return;
        if (n == 0) {
            *this = other;
            return;
        }
        const double delta = other.mean - mean;
        const std::uint64_t total = n + other.n;
        mean += delta * static_cast<double>(other.n) / static_cast<double>(total);
        m2 += other.m2 +
              delta * delta * static_cast<double>(n) * static_cast<double>(other.n) /
                  static_cast<double>(total);
        n = total;
    }

    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

void check_settings(const McSettings& s) {
    if (s.n_samples < 1000)
        throw std::invalid_argument("mc settings: n_samples must be at least 1e3");
    if (s.batch_size < 1) throw std::invalid_argument("mc settings: batch_size must be >= 1");
    if (!(s.confidence > 0.0 && s.confidence < 1.0))
        throw std::invalid_argument("mc settings: confidence must lie in (0,1)");
}

template <typename PerSample>
Accumulator run_batches(int m, const McSettings& settings, const PerSample& per_sample) {
    const std::uint64_t n_batches =
        (settings.n_samples + settings.batch_size - 1) / settings.batch_size;
    std::vector<Accumulator> partial(n_batches);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_batches) return;
            const std::uint64_t begin = b * settings.batch_size;
            const std::uint64_t end =
                std::min(begin + settings.batch_size, settings.n_samples);
            RngStream stream(settings.seed, b);
            Accumulator acc;
            for (std::uint64_t i = begin; i < end; ++i)
                acc.add(per_sample(sample_fading(m, stream)));
            partial[b] = acc;
        }
    };

    unsigned n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_batches));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    Accumulator total;
    for (const Accumulator& a : partial) total.merge(a);
    return total;
}

double wilson_halfwidth(double p_hat, std::uint64_t n, double confidence) {
    const double z = specfun::gaussian_quantile(0.5 * (1.0 + confidence));
    const double nd = static_cast<double>(n);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    return z * std::sqrt(p_hat * (1.0 - p_hat) / nd + z2 / (4.0 * nd * nd)) / denom;
}

MetricResult mean_result(const Accumulator& acc, Unit unit, double confidence) {
    MetricResult r;
    r.value = acc.mean;
    r.unit = unit;
    r.method = Method::MonteCarlo;
    const double z = specfun::gaussian_quantile(0.5 * (1.0 + confidence));
    r.ci_halfwidth = z * std::sqrt(acc.variance() / static_cast<double>(acc.n));
    return r;
}

bool is_near_user(Scenario scenario, User user) {
    return (scenario == Scenario::NomaSemiI && user == User::Comm) ||
           (scenario == Scenario::NomaSemiII && user == User::Radar);
}

void check_scenario(Scenario scenario) {
    if (scenario == Scenario::FdIsac)
        throw std::invalid_argument(
            "monte carlo: the orthogonal full-band benchmark is evaluated through the "
            "oma-semi path at beta = 1");
}

} // namespace

MetricResult mc_outage(const SystemConfig& cfg, Scenario scenario, User user, double gamma_th,
                       double gamma_sic, const McSettings& settings) {
    check_settings(settings);
    check_scenario(scenario);
    cfg.validate();
    if (gamma_th < 0.0) throw std::domain_error("mc_outage: requires gamma_th >= 0");

    auto indicator = [&](const FadingSample& f) -> double {
        if (scenario == Scenario::OmaSemi)
            return sinr_oma(cfg, user, f) < gamma_th ? 1.0 : 0.0;
        if (is_near_user(scenario, user))
            return sinr_noma(cfg, scenario, user, SicStage::PreSic, f) < gamma_th ? 1.0 : 0.0;
        const User near = (scenario == Scenario::NomaSemiI) ? User::Comm : User::Radar;
        const bool sic_ok = sinr_noma(cfg, scenario, near, SicStage::PreSic, f) > gamma_sic;
        const bool own_ok = sinr_noma(cfg, scenario, user, SicStage::PostSic, f) > gamma_th;
        return (sic_ok && own_ok) ? 0.0 : 1.0;
    };

    const Accumulator acc = run_batches(cfg.fading.m, settings, indicator);
    MetricResult r;
    r.value = acc.mean;
    r.unit = Unit::Probability;
    r.method = Method::MonteCarlo;
    r.ci_halfwidth = wilson_halfwidth(acc.mean, acc.n, settings.confidence);
    return r;
}

MetricResult mc_rate(const SystemConfig& cfg, Scenario scenario, User user,
                     const McSettings& settings) {
    check_settings(settings);
    check_scenario(scenario);
    cfg.validate();

    auto sample_rate = [&](const FadingSample& f) -> double {
        if (scenario == Scenario::OmaSemi)
            return 0.5 * std::log2(1.0 + sinr_oma(cfg, user, f));
        if (is_near_user(scenario, user))
            return std::log2(1.0 + sinr_noma(cfg, scenario, user, SicStage::PreSic, f));
        const User near = (scenario == Scenario::NomaSemiI) ? User::Comm : User::Radar;
        if (sinr_noma(cfg, scenario, near, SicStage::PreSic, f) <= cfg.thresholds.gamma_sic)
            return 0.0; // cancellation stage failed, no decodable rate
        return std::log2(1.0 + sinr_noma(cfg, scenario, user, SicStage::PostSic, f));
    };

    return mean_result(run_batches(cfg.fading.m, settings, sample_rate),
                       Unit::BitsPerChannelUse, settings.confidence);
}

MetricResult mc_reir(const SystemConfig& cfg, const McSettings& settings, SicModel sic) {
    check_settings(settings);
    cfg.validate();
    MetricResult zero;
    zero.unit = Unit::BitsPerSecond;
    zero.method = Method::MonteCarlo;
    if (cfg.bandwidth.beta_semi <= 0.0) return zero; // no shared band, rate is zero

    SystemConfig c = cfg;
    if (sic == SicModel::Perfect) {
        c.powers.varsigma_c = 0.0;
        c.powers.varsigma_r = 0.0;
    }
    const double two_t_beta_b = 2.0 * c.radar.pulse_duration * c.bandwidth.beta_semi *
                                c.bandwidth.total_hz;
    const double scale = c.radar.duty_cycle / (2.0 * c.radar.pulse_duration);

    auto sample_reir = [&](const FadingSample& f) -> double {
        return scale * std::log2(1.0 + two_t_beta_b * snr_radar_echo(c, f));
    };

    return mean_result(run_batches(c.fading.m, settings, sample_reir), Unit::BitsPerSecond,
                       settings.confidence);
}

MetricResult mc_mean_interference(const SystemConfig& cfg, const McSettings& settings) {
    check_settings(settings);
    cfg.validate();
    const double beta_b = cfg.bandwidth.beta_semi * cfg.bandwidth.total_hz;
    const double deterministic = cfg.powers.P_bs * cfg.powers.G_r *
                                 pathloss_radar(cfg.geometry, cfg.radar, cfg.geometry.d_r) *
                                 cfg.radar.gamma_sq * beta_b * beta_b *
                                 cfg.radar.sigma_tau_sq;
    auto sample_echo = [&](const FadingSample& f) -> double {
        return deterministic * f.h_rd_sq * f.h_ru_sq;
    };
    return mean_result(run_batches(cfg.fading.m, settings, sample_echo), Unit::Dimensionless,
                       settings.confidence);
}

} // namespace semiisac
