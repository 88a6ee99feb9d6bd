// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// catlab run <config> [--out DIR] [--threads K] [--cutoff D]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <iostream>

#include "CLI11.hpp"
#include "catlab/errors.hpp"
#include "catlab/experiments.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kNumericalExit = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cat-code teleportation error-correction experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int threads = 0;
    int cutoff = -1;
    CLI::App* run = app.add_subcommand("run", "Run the experiment described by a config file");
    run->add_option("config", config_path, "Config file (key = value)")->required();
    run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
    run->add_option("--threads", threads, "Worker threads (overrides threads)")
        ->check(CLI::PositiveNumber);
    run->add_option("--cutoff", cutoff, "Fock cutoff D for every mode (overrides cutoff)")
        ->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigExit;
    }

    try {
        catlab::ExperimentConfig cfg = catlab::load_experiment_config(config_path);
        if (!out_dir.empty()) {
            cfg.output_dir = out_dir;
        }
        if (threads > 0) {
            cfg.threads = threads;
        }
        if (cutoff > 0) {
            cfg.cutoff = cutoff;
        }
        for (const std::string& path : catlab::run_experiment(cfg)) {
            std::cout << "wrote " << path << "\n";
        }
    } catch (const catlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigExit;
    } catch (const catlab::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumericalExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kConfigExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
