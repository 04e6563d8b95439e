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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomacast/analysis.hpp"
#include "nomacast/montecarlo.hpp"

namespace nomacast {

/// Unknown scenario, malformed config file or invalid option value.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EvalMode { Analytic, MonteCarlo, Both };

EvalMode parse_eval_mode(const std::string& text);
std::string to_string(EvalMode mode);

/// One curve family inside a scenario (e.g. one antenna count).
struct ScenarioRun {
    std::string label; ///< empty for single-run scenarios
    SystemSize system{10, 11};
    LinkConfig rates; ///< rho is set per grid point
    bool scheduling = false;
    BeamformerKind oma_beamformer = BeamformerKind::Mrt;
};

struct Scenario {
    std::string name;
    std::vector<double> snr_grid_db;
    std::size_t quadrature_nodes = 20;
    std::vector<MetricKind> metrics;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 20161018;
    unsigned workers = 1;
    SamplingMode sampling = SamplingMode::FullMatrix;
    EvalMode mode = EvalMode::Both;
    std::vector<ScenarioRun> runs;

    /// Throws ConfigError on an inconsistent scenario.
    void validate() const;
};

std::vector<std::string> preset_names();

/// fig1 .. fig5. Throws ConfigError for unknown names.
Scenario preset_scenario(const std::string& name);

/// Parses the key = value format with [scenario] and [run LABEL] sections
/// (see docs/config-format.md).
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::filesystem::path& path);

/// Parses "LO:HI:STEP" (inclusive) or a comma-separated list of dB values.
std::vector<double> parse_snr_grid(const std::string& text);

/// Command-line overrides; unset fields leave the scenario untouched.
struct ScenarioOverrides {
    std::vector<MetricKind> metrics;
    std::optional<EvalMode> mode;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<std::vector<double>> snr_grid_db;
    std::optional<std::size_t> quadrature_nodes;
    std::optional<bool> scheduling;
    std::optional<BeamformerKind> oma_beamformer;
};

void apply_overrides(Scenario& scenario, const ScenarioOverrides& overrides);

/// One CSV line: snr_db,metric,method,value,stderr,ci_low,ci_high.
struct ResultRow {
    double snr_db = 0.0;
    std::string metric;
    std::string method; ///< "analytic" or "mc"
    double value = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    bool operator==(const ResultRow&) const = default;
};

inline constexpr const char* kCsvHeader = "snr_db,metric,method,value,stderr,ci_low,ci_high";

/// Sorts by (snr, metric, method) and prints floats with 9 significant digits.
std::string format_csv(std::vector<ResultRow> rows);
std::vector<ResultRow> parse_csv(const std::string& text);

/// Writes format_csv(rows) to `path`. Throws ConfigError for an empty row
/// set and std::runtime_error if the file cannot be written.
void emit_csv(std::span<const ResultRow> rows, const std::filesystem::path& path);

struct ComparisonRow {
    std::string run;
    double snr_db = 0.0;
    std::string metric;
    double analytic = 0.0;
    double mc = 0.0;
    double mc_stderr = 0.0;
    double abs_diff = 0.0;
    double abs_tol = 0.0;
    bool pass = false;
};

/// PASS iff |analytic - mc| <= max(abs_tol, 3 mc_stderr).
ComparisonRow compare(std::string run, double snr_db, std::string metric, double analytic,
                      const Estimate& mc, double abs_tol);

struct RunResult {
    ScenarioRun run;
    std::vector<ResultRow> rows;
};

struct ScenarioResult {
    std::string scenario;
    std::vector<RunResult> runs;
    std::vector<ComparisonRow> comparisons;
    std::vector<std::string> notes;

    bool all_pass() const;
};

/// Evaluates every run over the grid in the requested modes. Throws
/// UnsupportedAnalyticsError when a requested closed form does not exist.
ScenarioResult run_scenario(const Scenario& scenario);

/// Plain-text summary: comparison verdicts, NOMA-OMA gaps, notes.
std::string format_report(const ScenarioResult& result);

/// Writes <scenario>[_<run>]_<metric>.csv per run and metric plus
/// <scenario>_report.txt into `out_dir`. Returns the files written.
std::vector<std::filesystem::path> write_outputs(const ScenarioResult& result,
                                                 const std::filesystem::path& out_dir);

} // namespace nomacast
