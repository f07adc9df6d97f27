#ifndef SEMIISAC_VALIDATE_HPP
#define SEMIISAC_VALIDATE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "semiisac/scenario.hpp"

namespace semiisac {

/// One verdict of the validation suite. pass is decided when the check is
/// built (value checks: |got - expected| <= tolerance; bound checks:
/// got <= tolerance with expected = 0). Skipped checks never fail.
struct CheckResult {
    std::string name;
    double expected = 0.0;
    double got = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
};

struct ValidationOptions {
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = 12345;
};

/// "default" (1e6 samples) or "quick" (1e5 samples).
ValidationOptions options_for_profile(const std::string& profile);

/// Recompute every shorthand constant independently and compare against the
/// given table; a corrupted entry fails its named check.
std::vector<CheckResult> audit_derived_constants(const SystemConfig& cfg,
                                                 const DerivedConstants& table);

/// The full invariant and analytic-vs-Monte-Carlo suite for one config.
std::vector<CheckResult> run_validation(const SystemConfig& cfg,
                                        const ValidationOptions& options = {});

bool all_pass(const std::vector<CheckResult>& checks);

/// One line per check: name, expected, got, tolerance, verdict.
void print_report(std::ostream& os, const std::vector<CheckResult>& checks);

} // namespace semiisac

#endif
