/*
   Copyright 2026 The nomacast Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nomacast/experiments.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace nomacast {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        parts.push_back(trim(item));
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double to_double(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(x)) {
            throw std::invalid_argument(text);
        }
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid number '" + text + "' for " + what);
    }
}

std::uint64_t to_count(const std::string& text, const std::string& what)
{
    std::uint64_t x = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("invalid count '" + text + "' for " + what);
    }
    return x;
}

bool to_bool(const std::string& text, const std::string& what)
{
    if (text == "on" || text == "true" || text == "yes" || text == "1") {
        return true;
    }
    if (text == "off" || text == "false" || text == "no" || text == "0") {
        return false;
    }
    throw ConfigError("invalid switch '" + text + "' for " + what + " (use on/off)");
}

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// Absolute tolerance used when an analytic value is checked against Monte Carlo.
double comparison_tolerance(MetricKind m, const LinkConfig& rates)
{
    switch (m) {
    case MetricKind::MulticastOutage:
    case MetricKind::UnicastOutage:
        return 0.005;
    case MetricKind::SecrecyOutage:
        return 0.01;
    case MetricKind::OutageRateUnicast:
        return 0.005 * rates.rate_unicast;
    case MetricKind::OutageRateSecrecy:
        return 0.01 * rates.rate_secrecy;
    default:
        return 0.0;
    }
}

bool is_secrecy_analytic(MetricKind m)
{
    return m == MetricKind::SecrecyOutage || m == MetricKind::OutageRateSecrecy;
}

bool has_closed_form(MetricKind m)
{
    switch (m) {
    case MetricKind::MulticastOutage:
    case MetricKind::UnicastOutage:
    case MetricKind::SecrecyOutage:
    case MetricKind::OutageRateUnicast:
    case MetricKind::OutageRateSecrecy:
    case MetricKind::NomaNotBetter:
        return true;
    default:
        return false;
    }
}

void set_run_key(ScenarioRun& run, const std::string& key, const std::string& value)
{
    if (key == "antennas") {
        run.system.antennas = static_cast<int>(to_count(value, key));
    } else if (key == "users") {
        run.system.users = static_cast<int>(to_count(value, key));
    } else if (key == "rate_multicast") {
        run.rates.rate_multicast = to_double(value, key);
    } else if (key == "rate_unicast") {
        run.rates.rate_unicast = to_double(value, key);
    } else if (key == "rate_secrecy") {
        run.rates.rate_secrecy = to_double(value, key);
    } else if (key == "scheduling") {
        run.scheduling = to_bool(value, key);
    } else if (key == "oma_beamformer") {
        try {
            run.oma_beamformer = parse_beamformer_kind(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void set_scenario_key(Scenario& s, const std::string& key, const std::string& value)
{
    if (key == "name") {
        s.name = value;
    } else if (key == "snr_db") {
        s.snr_grid_db = parse_snr_grid(value);
    } else if (key == "quadrature_nodes") {
        s.quadrature_nodes = to_count(value, key);
    } else if (key == "metrics") {
        s.metrics.clear();
        for (const auto& name : split(value, ',')) {
            try {
                s.metrics.push_back(parse_metric_kind(name));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
    } else if (key == "samples") {
        s.samples = to_count(value, key);
    } else if (key == "seed") {
        s.seed = to_count(value, key);
    } else if (key == "workers") {
        s.workers = static_cast<unsigned>(to_count(value, key));
    } else if (key == "sampling") {
        if (value == "full") {
            s.sampling = SamplingMode::FullMatrix;
        } else if (value == "direct") {
            s.sampling = SamplingMode::DirectGains;
        } else {
            throw ConfigError("invalid sampling '" + value + "' (use full or direct)");
        }
    } else if (key == "mode") {
        s.mode = parse_eval_mode(value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

ScenarioRun make_run(std::string label, int antennas, int users, double r_m, double r_u,
                     double r_s, bool scheduling = false,
                     BeamformerKind oma = BeamformerKind::Mrt)
{
    ScenarioRun run;
    run.label = std::move(label);
    run.system = {antennas, users};
    run.rates.rate_multicast = r_m;
    run.rates.rate_unicast = r_u;
    run.rates.rate_secrecy = r_s;
    run.scheduling = scheduling;
    run.oma_beamformer = oma;
    return run;
}

} // namespace

EvalMode parse_eval_mode(const std::string& text)
{
    if (text == "analytic") {
        return EvalMode::Analytic;
    }
    if (text == "mc") {
        return EvalMode::MonteCarlo;
    }
    if (text == "both") {
        return EvalMode::Both;
    }
    throw ConfigError("invalid mode '" + text + "' (use analytic, mc or both)");
}

std::string to_string(EvalMode mode)
{
    switch (mode) {
    case EvalMode::Analytic: return "analytic";
    case EvalMode::MonteCarlo: return "mc";
    case EvalMode::Both: return "both";
    }
    return "unknown";
}

void Scenario::validate() const
{
    if (snr_grid_db.empty()) {
        throw ConfigError("scenario '" + name + "' has an empty SNR grid");
    }
    if (metrics.empty()) {
        throw ConfigError("scenario '" + name + "' requests no metrics");
    }
    if (runs.empty()) {
        throw ConfigError("scenario '" + name + "' has no runs");
    }
    if (quadrature_nodes < 1) {
        throw ConfigError("quadrature_nodes must be at least 1");
    }
    if (mode != EvalMode::Analytic && samples == 0) {
        throw ConfigError("Monte Carlo needs samples >= 1 (use --mode analytic for samples = 0)");
    }
    if (workers == 0) {
        throw ConfigError("workers must be at least 1");
    }
    for (const auto& run : runs) {
        try {
            LinkConfig probe = run.rates;
            probe.rho = 1.0;
            probe.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError("run '" + run.label + "': " + e.what());
        }
        if (run.system.users < 2 || run.system.antennas < 1) {
            throw ConfigError("run '" + run.label + "' needs users >= 2 and antennas >= 1");
        }
        if (sampling == SamplingMode::DirectGains &&
            (run.scheduling || run.oma_beamformer != BeamformerKind::Mrt)) {
            throw ConfigError("run '" + run.label +
                              "': direct sampling cannot model scheduling or non-MRT OMA");
        }
        for (MetricKind m : metrics) {
            if (needs_secrecy_target(m) && !(run.rates.rate_secrecy > 0.0)) {
                throw ConfigError(to_string(m) + " needs rate_secrecy > 0 in run '" + run.label + "'");
            }
        }
    }
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5"}; }

Scenario preset_scenario(const std::string& name)
{
    Scenario s;
    s.name = name;
    if (name == "fig1") {
        s.snr_grid_db = parse_snr_grid("0:40:4");
        s.quadrature_nodes = 20;
        s.metrics = {MetricKind::UnicastOutage, MetricKind::UnicastOutageOma,
                     MetricKind::OutageRateUnicast, MetricKind::OutageRateUnicastOma};
        s.runs = {make_run("M2", 2, 11, 1, 6, 0), make_run("M10", 10, 11, 1, 6, 0)};
    } else if (name == "fig2") {
        s.snr_grid_db = parse_snr_grid("0:40:4");
        s.metrics = {MetricKind::UnicastOutage, MetricKind::UnicastOutageOma,
                     MetricKind::OutageRateUnicast, MetricKind::OutageRateUnicastOma};
        s.runs = {make_run("no_scheduling", 2, 11, 1, 7, 0, false),
                  make_run("scheduling", 2, 11, 1, 7, 0, true)};
    } else if (name == "fig3") {
        s.snr_grid_db = parse_snr_grid("0:40:4");
        s.metrics = {MetricKind::OutageRateUnicast, MetricKind::OutageRateUnicastOma};
        s.runs = {make_run("oma_mrt", 10, 11, 1, 6, 0, false, BeamformerKind::Mrt),
                  make_run("oma_equal", 10, 11, 1, 6, 0, false, BeamformerKind::EqualGain),
                  make_run("oma_random", 10, 11, 1, 6, 0, false, BeamformerKind::Random)};
    } else if (name == "fig4") {
        s.snr_grid_db = parse_snr_grid("0:40:5");
        s.quadrature_nodes = 500;
        s.metrics = {MetricKind::SecrecyOutage, MetricKind::SecrecyOutageOma,
                     MetricKind::OutageRateSecrecy, MetricKind::OutageRateSecrecyOma};
        s.runs = {make_run("RS1", 10, 11, 1, 6, 1), make_run("RS2", 10, 11, 1, 6, 2),
                  make_run("RS3", 10, 11, 1, 6, 3)};
    } else if (name == "fig5") {
        s.snr_grid_db = parse_snr_grid("0:40:5");
        s.quadrature_nodes = 500;
        s.metrics = {MetricKind::SecrecyOutage, MetricKind::SecrecyOutageOma,
                     MetricKind::OutageRateSecrecy, MetricKind::OutageRateSecrecyOma};
        s.runs = {make_run("no_scheduling", 10, 11, 1, 6, 2, false),
                  make_run("scheduling", 10, 11, 1, 6, 2, true)};
    } else {
        throw ConfigError("unknown scenario '" + name + "' (presets: fig1 .. fig5)");
    }
    return s;
}

std::vector<double> parse_snr_grid(const std::string& text)
{
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw ConfigError("SNR range must be LO:HI:STEP, got '" + text + "'");
        }
        const double lo = to_double(parts[0], "snr lo");
        const double hi = to_double(parts[1], "snr hi");
        const double step = to_double(parts[2], "snr step");
        if (!(step > 0.0) || hi < lo) {
            throw ConfigError("SNR range needs STEP > 0 and HI >= LO");
        }
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            grid.push_back(lo + static_cast<double>(i) * step);
        }
    } else {
        for (const auto& item : split(text, ',')) {
            grid.push_back(to_double(item, "snr grid"));
        }
    }
    if (grid.empty()) {
        throw ConfigError("SNR grid is empty");
    }
    return grid;
}

Scenario parse_scenario(const std::string& text)
{
    Scenario s;
    s.metrics.clear();
    ScenarioRun base;
    std::vector<ScenarioRun> runs;
    enum class Section { None, Scenario, Run } section = Section::None;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const std::string where = " (line " + std::to_string(line_no) + ")";
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("unterminated section header" + where);
            }
            const std::string header = trim(std::string_view(line).substr(1, line.size() - 2));
            if (header == "scenario") {
                if (section == Section::Run) {
                    throw ConfigError("[scenario] must precede all [run] sections" + where);
                }
                section = Section::Scenario;
            } else if (header.rfind("run", 0) == 0 && (header.size() == 3 || header[3] == ' ')) {
                const std::string label = trim(std::string_view(header).substr(3));
                if (label.empty()) {
                    throw ConfigError("[run] needs a label" + where);
                }
                runs.push_back(base);
                runs.back().label = label;
                section = Section::Run;
            } else {
                throw ConfigError("unknown section [" + header + "]" + where);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected key = value" + where);
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (section == Section::None) {
            throw ConfigError("key outside of a section" + where);
        }
        try {
            if (section == Section::Run) {
                set_run_key(runs.back(), key, value);
            } else {
                try {
                    set_scenario_key(s, key, value);
                } catch (const ConfigError& e) {
                    if (std::string(e.what()).rfind("unknown key", 0) != 0) {
                        throw;
                    }
                    set_run_key(base, key, value);
                }
            }
        } catch (const ConfigError& e) {
            throw ConfigError(e.what() + where);
        }
    }
    if (s.name.empty()) {
        throw ConfigError("scenario needs a name");
    }
    s.runs = runs.empty() ? std::vector<ScenarioRun>{base} : runs;
    s.validate();
    return s;
}

Scenario load_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

void apply_overrides(Scenario& s, const ScenarioOverrides& o)
{
    if (!o.metrics.empty()) {
        s.metrics = o.metrics;
    }
    if (o.mode) {
        s.mode = *o.mode;
    }
    if (o.samples) {
        s.samples = *o.samples;
    }
    if (o.seed) {
        s.seed = *o.seed;
    }
    if (o.workers) {
        s.workers = *o.workers;
    }
    if (o.snr_grid_db) {
        s.snr_grid_db = *o.snr_grid_db;
    }
    if (o.quadrature_nodes) {
        s.quadrature_nodes = *o.quadrature_nodes;
    }
    for (auto& run : s.runs) {
        if (o.scheduling) {
            run.scheduling = *o.scheduling;
        }
        if (o.oma_beamformer) {
            run.oma_beamformer = *o.oma_beamformer;
        }
    }
}

std::string format_csv(std::vector<ResultRow> rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.snr_db, a.metric, a.method) < std::tie(b.snr_db, b.metric, b.method);
    });
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += format_number(r.snr_db) + ',' + r.metric + ',' + r.method + ',' +
               format_number(r.value) + ',' + format_number(r.std_error) + ',' +
               format_number(r.ci_low) + ',' + format_number(r.ci_high) + '\n';
    }
    return out;
}

std::vector<ResultRow> parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) {
        throw ConfigError("CSV header does not match the expected schema");
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 7) {
            throw ConfigError("CSV row has " + std::to_string(f.size()) + " fields: " + line);
        }
        rows.push_back({to_double(f[0], "snr_db"), f[1], f[2], to_double(f[3], "value"),
                        to_double(f[4], "stderr"), to_double(f[5], "ci_low"),
                        to_double(f[6], "ci_high")});
    }
    return rows;
}

void emit_csv(std::span<const ResultRow> rows, const std::filesystem::path& path)
{
    if (rows.empty()) {
        throw ConfigError("refusing to write an empty CSV to " + path.string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << format_csv({rows.begin(), rows.end()});
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

ComparisonRow compare(std::string run, double snr_db, std::string metric, double analytic,
                      const Estimate& mc, double abs_tol)
{
    ComparisonRow row;
    row.run = std::move(run);
    row.snr_db = snr_db;
    row.metric = std::move(metric);
    row.analytic = analytic;
    row.mc = mc.value;
    row.mc_stderr = mc.std_error;
    row.abs_diff = std::abs(analytic - mc.value);
    row.abs_tol = abs_tol;
    row.pass = row.abs_diff <= std::max(abs_tol, 3.0 * mc.std_error);
    return row;
}

bool ScenarioResult::all_pass() const
{
    return std::all_of(comparisons.begin(), comparisons.end(),
                       [](const ComparisonRow& r) { return r.pass; });
}

ScenarioResult run_scenario(const Scenario& s)
{
    s.validate();
    const bool analytic = s.mode != EvalMode::MonteCarlo;
    const bool simulate = s.mode != EvalMode::Analytic;

    if (analytic) {
        for (const auto& run : s.runs) {
            for (MetricKind m : s.metrics) {
                if (is_secrecy_analytic(m) && run.system.users < 3) {
                    throw UnsupportedAnalyticsError("run '" + (run.label.empty() ? s.name : run.label) + "': " + to_string(m) +
                                                    " has no closed form for K = 2");
                }
            }
        }
    }

    ScenarioResult result;
    result.scenario = s.name;
    const QuadratureRule rule = cheb_rule(s.quadrature_nodes);

    for (const auto& run : s.runs) {
        RunResult rr;
        rr.run = run;
        const std::string run_name = run.label.empty() ? s.name : run.label;

        std::vector<SweepPoint> mc;
        if (simulate) {
            SimulationPlan plan;
            plan.samples = s.samples;
            plan.seed = s.seed;
            plan.mode = s.sampling;
            plan.scheduling = run.scheduling;
            plan.oma_beamformer = run.oma_beamformer;
            plan.workers = s.workers;
            mc = sweep(s.metrics, run.rates, run.system, s.snr_grid_db, plan);
        }
        const bool run_analytic = analytic && !run.scheduling;
        if (analytic && run.scheduling) {
            result.notes.push_back(run_name +
                                   ": closed forms assume a fixed unicast user; analytic rows "
                                   "skipped with scheduling on");
        }

        for (std::size_t p = 0; p < s.snr_grid_db.size(); ++p) {
            const double snr = s.snr_grid_db[p];
            LinkConfig cfg = run.rates;
            cfg.rho = db_to_linear(snr);

            std::optional<UnicastOutage> unicast;
            std::optional<SecrecyOutage> secrecy;
            std::optional<AnalysisParams> params;
            auto analysis = [&]() -> const AnalysisParams& {
                if (!params) {
                    params = AnalysisParams::make(run.system.antennas, run.system.users, cfg);
                }
                return *params;
            };

            for (MetricKind m : s.metrics) {
                std::optional<double> closed;
                std::string closed_name = to_string(m);
                if (run_analytic && has_closed_form(m)) {
                    switch (m) {
                    case MetricKind::MulticastOutage:
                        closed = multicast_outage_prob(analysis());
                        break;
                    case MetricKind::UnicastOutage:
                    case MetricKind::OutageRateUnicast:
                        if (!unicast) {
                            unicast = unicast_outage_prob(analysis(), rule);
                            if (unicast->under_resolved) {
                                result.notes.push_back(run_name + " @ " + format_number(snr) +
                                                       " dB: unicast outage quadrature moves by "
                                                       "> 1e-4 when doubling nodes");
                            }
                        }
                        closed = m == MetricKind::UnicastOutage
                                     ? unicast->probability
                                     : (1.0 - unicast->probability) * cfg.rate_unicast;
                        break;
                    case MetricKind::SecrecyOutage:
                    case MetricKind::OutageRateSecrecy:
                        if (!secrecy) {
                            secrecy = secrecy_outage_prob(analysis(), rule);
                        }
                        closed = m == MetricKind::SecrecyOutage
                                     ? secrecy->probability
                                     : (1.0 - secrecy->probability) * cfg.rate_secrecy;
                        break;
                    case MetricKind::NomaNotBetter:
                        closed = pd_lower_bound(analysis()).exact;
                        closed_name = "p_d_lower_bound";
                        break;
                    default:
                        break;
                    }
                }
                if (closed) {
                    rr.rows.push_back({snr, closed_name, "analytic", *closed, 0.0, *closed, *closed});
                }
                if (simulate) {
                    const Estimate& e = mc[p].estimates.at(m);
                    rr.rows.push_back({snr, to_string(m), "mc", e.value, e.std_error, e.ci_low, e.ci_high});
                    if (closed && m != MetricKind::NomaNotBetter) {
                        result.comparisons.push_back(compare(run_name, snr, to_string(m), *closed, e,
                                                             comparison_tolerance(m, cfg)));
                    }
                }
            }
        }
        result.runs.push_back(std::move(rr));
    }
    return result;
}

std::string format_report(const ScenarioResult& result)
{
    std::ostringstream out;
    out << "scenario " << result.scenario << '\n';

    if (!result.comparisons.empty()) {
        out << "\nanalytic vs monte carlo\n";
        out << "run,snr_db,metric,analytic,mc,mc_stderr,abs_diff,verdict\n";
        for (const auto& c : result.comparisons) {
            out << c.run << ',' << format_number(c.snr_db) << ',' << c.metric << ','
                << format_number(c.analytic) << ',' << format_number(c.mc) << ','
                << format_number(c.mc_stderr) << ',' << format_number(c.abs_diff) << ','
                << (c.pass ? "PASS" : "FAIL") << '\n';
        }
    }

    // NOMA minus OMA for every outage-rate pair simulated in a run.
    const std::pair<MetricKind, MetricKind> pairs[] = {
        {MetricKind::OutageRateUnicast, MetricKind::OutageRateUnicastOma},
        {MetricKind::OutageRateSecrecy, MetricKind::OutageRateSecrecyOma},
    };
    bool gap_header = false;
    for (const auto& run : result.runs) {
        for (const auto& [noma, oma] : pairs) {
            std::map<double, std::pair<double, double>> by_snr;
            std::map<double, int> seen;
            for (const auto& row : run.rows) {
                if (row.method != "mc") {
                    continue;
                }
                if (row.metric == to_string(noma)) {
                    by_snr[row.snr_db].first = row.value;
                    seen[row.snr_db] |= 1;
                } else if (row.metric == to_string(oma)) {
                    by_snr[row.snr_db].second = row.value;
                    seen[row.snr_db] |= 2;
                }
            }
            for (const auto& [snr, values] : by_snr) {
                if (seen[snr] != 3) {
                    continue;
                }
                if (!gap_header) {
                    out << "\nnoma - oma outage rate gap (monte carlo)\n";
                    out << "run,snr_db,metric,noma,oma,gap\n";
                    gap_header = true;
                }
                out << (run.run.label.empty() ? result.scenario : run.run.label) << ','
                    << format_number(snr) << ',' << to_string(noma) << ','
                    << format_number(values.first) << ',' << format_number(values.second) << ','
                    << format_number(values.first - values.second) << '\n';
            }
        }
    }

    if (!result.notes.empty()) {
        out << "\nnotes\n";
        for (const auto& n : result.notes) {
            out << "- " << n << '\n';
        }
    }
    out << "\noverall " << (result.all_pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::vector<std::filesystem::path> write_outputs(const ScenarioResult& result,
                                                 const std::filesystem::path& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + out_dir.string());
    }
    std::vector<std::filesystem::path> written;
    for (const auto& run : result.runs) {
        std::map<std::string, std::vector<ResultRow>> by_metric;
        for (const auto& row : run.rows) {
            // The p_d bound travels with the p_d estimate.
            const std::string key = row.metric == "p_d_lower_bound" ? "p_d" : row.metric;
            by_metric[key].push_back(row);
        }
        for (const auto& [metric, rows] : by_metric) {
            std::string file = result.scenario;
            if (!run.run.label.empty()) {
                file += "_" + run.run.label;
            }
            file += "_" + metric + ".csv";
            emit_csv(rows, out_dir / file);
            written.push_back(out_dir / file);
        }
    }
    const auto report = out_dir / (result.scenario + "_report.txt");
    std::ofstream out(report, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + report.string());
    }
    out << format_report(result);
    written.push_back(report);
    return written;
}

} // namespace nomacast
