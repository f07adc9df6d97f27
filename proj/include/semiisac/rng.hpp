#ifndef SEMIISAC_RNG_HPP
#define SEMIISAC_RNG_HPP

#include <cstdint>
#include <random>

namespace semiisac {

/// One independent random stream. Streams are derived deterministically
/// from (seed, stream_id), so batch workers never share state and results
/// do not depend on scheduling. Variate transforms are hand-rolled: the
/// mt19937_64 engine is bit-exact across platforms, the std distributions
/// are not.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Uniform draw on (0, 1), endpoints excluded.
    double uniform();

    /// Standard normal draw (Marsaglia polar, second value cached).
    double normal();

    /// Gamma(shape, 1) draw for shape >= 1 (Marsaglia-Tsang squeeze).
    double gamma(double shape);

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// splitmix64 step; used to derive per-stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace semiisac

#endif
