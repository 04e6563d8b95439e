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

// nomacast: evaluate the NOMA multicast/unicast closed forms and Monte Carlo
// estimates over an SNR sweep and write CSV plus a comparison report.
//
// Exit status: 0 all comparisons pass, 1 some comparison failed,
// 2 configuration error, 3 unsupported analytic request.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nomacast/experiments.hpp"

namespace {

enum ExitCode { kPass = 0, kFail = 1, kConfig = 2, kUnsupported = 3 };

} // namespace

int main(int argc, char** argv)
{
    using namespace nomacast;

    CLI::App app{"NOMA multicast/unicast outage and secrecy experiments"};
    std::string scenario_name;
    std::string config_path;
    std::vector<std::string> metric_names;
    std::string mode;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::string snr;
    std::string out_dir = "results";
    std::optional<std::size_t> nodes;
    std::string scheduling;
    std::string oma_beamformer;
    bool list = false;

    auto* scenario_opt = app.add_option("--scenario", scenario_name, "preset name (fig1 .. fig5)");
    auto* config_opt = app.add_option("--config", config_path, "scenario config file");
    scenario_opt->excludes(config_opt);
    app.add_option("--metric", metric_names, "metric to evaluate (repeatable)");
    app.add_option("--mode", mode, "analytic, mc or both");
    app.add_option("--samples", samples, "Monte Carlo samples per SNR point");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--workers", workers, "worker threads");
    app.add_option("--snr", snr, "SNR grid in dB, LO:HI:STEP or a comma list");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--na", nodes, "Chebyshev-Gauss nodes");
    app.add_option("--scheduling", scheduling, "on or off");
    app.add_option("--oma-beamformer", oma_beamformer, "mrt, equal or random");
    app.add_flag("--list-scenarios", list, "print the preset names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }

    if (list) {
        for (const auto& name : preset_names()) {
            std::cout << name << '\n';
        }
        return kPass;
    }

    try {
        if (scenario_name.empty() == config_path.empty()) {
            throw ConfigError("exactly one of --scenario or --config is required");
        }
        Scenario scenario = scenario_name.empty() ? load_scenario_file(config_path)
                                                  : preset_scenario(scenario_name);

        ScenarioOverrides o;
        for (const auto& name : metric_names) {
            try {
                o.metrics.push_back(parse_metric_kind(name));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        if (!mode.empty()) {
            o.mode = parse_eval_mode(mode);
        }
        o.samples = samples;
        o.seed = seed;
        o.workers = workers;
        if (!snr.empty()) {
            o.snr_grid_db = parse_snr_grid(snr);
        }
        o.quadrature_nodes = nodes;
        if (!scheduling.empty()) {
            if (scheduling != "on" && scheduling != "off") {
                throw ConfigError("--scheduling takes on or off");
            }
            o.scheduling = scheduling == "on";
        }
        if (!oma_beamformer.empty()) {
            try {
                o.oma_beamformer = parse_beamformer_kind(oma_beamformer);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        apply_overrides(scenario, o);
        scenario.validate();

        const ScenarioResult result = run_scenario(scenario);
        for (const auto& path : write_outputs(result, out_dir)) {
            std::cerr << "wrote " << path.string() << '\n';
        }
        std::cout << format_report(result);
        return result.all_pass() ? kPass : kFail;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const UnsupportedAnalyticsError& e) {
        std::cerr << "unsupported analytics: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        // I/O failures (e.g. an unwritable --out) are reported as config errors.
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }
}
