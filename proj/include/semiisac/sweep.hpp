#ifndef SEMIISAC_SWEEP_HPP
#define SEMIISAC_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "semiisac/montecarlo.hpp"
#include "semiisac/scenario.hpp"

namespace semiisac {

/// Declarative sweep axis. "scale" spaces the axis values: "linear"/"dB"
/// step evenly (power fields are already in dBm), "log" steps geometrically.
struct AxisSpec {
    std::string param;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    std::string scale = "linear";
};

struct SweepSpec {
    SystemConfig base;
    AxisSpec axis;
    std::vector<Scenario> scenarios;
    std::vector<std::string> metrics;
    std::optional<McSettings> mc;
};

std::vector<double> axis_values(const AxisSpec& axis);

SweepSpec sweep_from_json_text(const std::string& text);
SweepSpec load_sweep_spec(const std::string& path);

/// One CSV output row; serialized as axis,scenario,user,metric,method,value,ci
/// with 17 significant digits.
struct CsvRow {
    std::string axis;
    std::string scenario;
    std::string user;
    std::string metric;
    std::string method;
    double value = 0.0;
    std::optional<double> ci;
};

std::string csv_header();
std::string format_csv_row(const CsvRow& row);
std::string format_value(double v);

/// Evaluate one metric for one scenario at the given config. Emits the
/// analytic/quadrature row(s) and, when mc is set and the metric has a
/// Monte Carlo counterpart (op, rate, reir), the matching estimate row.
std::vector<CsvRow> eval_metric_rows(const SystemConfig& cfg, Scenario scenario,
                                     const std::string& metric,
                                     const std::optional<McSettings>& mc);

/// Deterministic CSV for the whole sweep: axis values in order, then
/// scenarios and metrics in spec order, users c before r. A failing point
/// aborts with the offending axis value named.
std::string run_sweep_csv(const SweepSpec& spec);

void run_sweep_to_file(const SweepSpec& spec, const std::string& out_path);

} // namespace semiisac

#endif
