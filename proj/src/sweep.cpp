#include "semiisac/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semiisac {

using nlohmann::json;

std::vector<double> axis_values(const AxisSpec& axis) {
    if (axis.points < 2) throw std::invalid_argument("sweep axis: points must be >= 2");
    std::vector<double> values;
    values.reserve(axis.points);
    if (axis.scale == "log") {
        if (!(axis.start > 0.0 && axis.stop > 0.0))
            throw std::invalid_argument("sweep axis: log scale needs positive endpoints");
        const double ratio = std::log(axis.stop / axis.start) / (axis.points - 1);
        for (int i = 0; i < axis.points; ++i)
            values.push_back(axis.start * std::exp(ratio * i));
    } else if (axis.scale == "linear" || axis.scale == "dB") {
        const double step = (axis.stop - axis.start) / (axis.points - 1);
        for (int i = 0; i < axis.points; ++i) values.push_back(axis.start + step * i);
    } else {
        throw std::invalid_argument("sweep axis: scale must be linear, log or dB");
    }
    return values;
}

SweepSpec sweep_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep spec: invalid JSON: ") + e.what());
    }
    SweepSpec spec;
    if (!j.contains("axis") || !j.contains("scenarios") || !j.contains("metrics"))
        throw std::invalid_argument("sweep spec: needs axis, scenarios and metrics");

    if (j.contains("config")) {
        const json& c = j.at("config");
        spec.base = c.is_string() ? load_config(c.get<std::string>())
                                  : config_from_json_text(c.dump());
    } else {
        spec.base = paper_sec6_preset();
    }

    const json& a = j.at("axis");
    spec.axis.param = a.at("param");
    spec.axis.start = a.at("start");
    spec.axis.stop = a.at("stop");
    spec.axis.points = a.at("points");
    if (a.contains("scale")) spec.axis.scale = a.at("scale");

    for (const auto& s : j.at("scenarios"))
        spec.scenarios.push_back(scenario_from_string(s.get<std::string>()));
    for (const auto& m : j.at("metrics")) spec.metrics.push_back(m.get<std::string>());
    if (spec.scenarios.empty() || spec.metrics.empty())
        throw std::invalid_argument("sweep spec: scenarios and metrics must be nonempty");

    if (j.contains("mc")) {
        const json& m = j.at("mc");
        McSettings s;
        if (m.contains("n_samples")) s.n_samples = m.at("n_samples").get<std::uint64_t>();
        if (m.contains("seed")) s.seed = m.at("seed").get<std::uint64_t>();
        if (m.contains("batch_size")) s.batch_size = m.at("batch_size").get<std::uint64_t>();
        if (m.contains("confidence")) s.confidence = m.at("confidence").get<double>();
        spec.mc = s;
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("sweep spec: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return sweep_from_json_text(buffer.str());
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header() { return "axis,scenario,user,metric,method,value,ci\n"; }

std::string format_csv_row(const CsvRow& row) {
    std::string line = row.axis;
    line += ',';
    line += row.scenario;
    line += ',';
    line += row.user;
    line += ',';
    line += row.metric;
    line += ',';
    line += row.method;
    line += ',';
    line += format_value(row.value);
    line += ',';
    if (row.ci) line += format_value(*row.ci);
    line += '\n';
    return line;
}

namespace {

CsvRow make_row(Scenario scenario, const std::string& user, const std::string& metric,
                const MetricResult& res) {
    CsvRow row;
    row.scenario = to_string(scenario);
    row.user = user;
    row.metric = metric;
    row.method = to_string(res.method);
    row.value = res.value;
    row.ci = res.ci_halfwidth;
    return row;
}

// The full-band orthogonal benchmark is the oma-semi evaluator on the
// forced split (0, 1, 0).
SystemConfig effective_config(const SystemConfig& cfg, Scenario scenario) {
    if (scenario != Scenario::FdIsac) return cfg;
    SystemConfig c = cfg;
    c.bandwidth.alpha_semi = 0.0;
    c.bandwidth.beta_semi = 1.0;
    c.bandwidth.epsilon_semi = 0.0;
    return c;
}

bool is_noma(Scenario s) { return s == Scenario::NomaSemiI || s == Scenario::NomaSemiII; }

} // namespace

std::vector<CsvRow> eval_metric_rows(const SystemConfig& base, Scenario scenario,
                                     const std::string& metric,
                                     const std::optional<McSettings>& mc) {
    std::vector<CsvRow> rows;
    const SystemConfig cfg = effective_config(base, scenario);
    const Scenario mc_scenario = (scenario == Scenario::FdIsac) ? Scenario::OmaSemi : scenario;
    const double g_th = is_noma(scenario) ? cfg.thresholds.gamma_th
                                          : cfg.thresholds.gamma_th_oma;
    const double g_sic = cfg.thresholds.gamma_sic;

    if (metric == "op" || metric == "rate") {
        for (User u : {User::Comm, User::Radar}) {
            MetricResult res;
            if (metric == "op")
                res = is_noma(scenario) ? op_noma(cfg, scenario, u, g_th, g_sic)
                                        : op_oma(cfg, u, g_th);
            else
                res = is_noma(scenario) ? rate_noma(cfg, scenario, u) : rate_oma(cfg, u);
            rows.push_back(make_row(scenario, to_string(u), metric, res));
            if (mc) {
                const MetricResult est =
                    metric == "op" ? mc_outage(cfg, mc_scenario, u, g_th, g_sic, *mc)
                                   : mc_rate(cfg, mc_scenario, u, *mc);
                rows.push_back(make_row(scenario, to_string(u), metric, est));
            }
        }
    } else if (metric == "op_asymptotic") {
        if (!is_noma(scenario))
            throw std::invalid_argument("metric op_asymptotic needs a superposed scenario");
        for (User u : {User::Comm, User::Radar})
            rows.push_back(make_row(scenario, to_string(u), metric,
                                    asymptotic_op(cfg, scenario, u, g_th, g_sic)));
    } else if (metric == "diversity") {
        if (!is_noma(scenario))
            throw std::invalid_argument("metric diversity needs a superposed scenario");
        for (User u : {User::Comm, User::Radar}) {
            MetricResult res;
            res.value = diversity_order(cfg, scenario, u);
            res.unit = Unit::Dimensionless;
            res.method = Method::Analytic;
            rows.push_back(make_row(scenario, to_string(u), metric, res));
        }
    } else if (metric == "reir") {
        rows.push_back(make_row(scenario, "-", metric, reir_general(cfg)));
        if (mc)
            rows.push_back(make_row(scenario, "-", metric,
                                    mc_reir(cfg, *mc, SicModel::Imperfect)));
    } else if (metric == "reir_rayleigh") {
        rows.push_back(make_row(scenario, "-", metric, reir_rayleigh(cfg)));
    } else if (metric == "reir_asymptotic") {
        // below m = 3 the expansion does not exist; report the general
        // quadrature value instead of failing the whole sweep
        const MetricResult res =
            cfg.fading.m >= 3 ? reir_asymptotic(cfg) : reir_general(cfg);
        rows.push_back(make_row(scenario, "-", metric, res));
    } else if (metric == "capacity") {
        rows.push_back(make_row(scenario, "-", metric, capacity_aggregate(base, scenario)));
    } else if (metric == "slope") {
        MetricResult res;
        res.value = high_snr_slope(cfg.radar);
        res.unit = Unit::NatsPerLnPower;
        res.method = Method::Analytic;
        rows.push_back(make_row(scenario, "-", metric, res));
    } else if (metric == "ber") {
        if (cfg.bandwidth.beta_semi <= 0.0)
            throw std::invalid_argument("metric ber needs beta_semi > 0");
        const double snr_mean = mean_radar_interference(cfg) / cfg.noise_power();
        BerParams params;
        params.psk_order = cfg.psk.order;
        params.standard_mapping = cfg.psk.standard_mapping;
        MetricResult res;
        res.value = ber_mpsk(params, snr_mean);
        res.unit = Unit::Probability;
        res.method = Method::Analytic;
        rows.push_back(make_row(scenario, "-", metric, res));
    } else {
        throw std::invalid_argument("unknown metric '" + metric + "'");
    }
    return rows;
}

std::string run_sweep_csv(const SweepSpec& spec) {
    const std::vector<double> values = axis_values(spec.axis);
    std::string csv = csv_header();
    for (double v : values) {
        try {
            SystemConfig cfg = spec.base;
            set_config_field(cfg, spec.axis.param, v);
            for (Scenario scenario : spec.scenarios) {
                for (const std::string& metric : spec.metrics) {
                    for (CsvRow row : eval_metric_rows(cfg, scenario, metric, spec.mc)) {
                        row.axis = format_value(v);
                        csv += format_csv_row(row);
                    }
                }
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep aborted at axis value " + format_value(v) + ": " +
                                     e.what());
        }
    }
    return csv;
}

void run_sweep_to_file(const SweepSpec& spec, const std::string& out_path) {
    const std::string csv = run_sweep_csv(spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << csv;
}

} // namespace semiisac
