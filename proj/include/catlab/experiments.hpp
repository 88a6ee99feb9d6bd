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

// Configuration-driven sweeps. Each experiment reads one config, runs its
// points on a small worker pool and writes CSV files whose '#' header
// records the cutoffs, tolerances and grids that were actually used.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catlab/cavity.hpp"
#include "catlab/config.hpp"
#include "catlab/metrics.hpp"
#include "catlab/teleport.hpp"

namespace catlab {

/// Inclusive grid min, min + step, ..., max.
struct AlphaGrid {
    double min = 0.5;
    double max = 5.0;
    double step = 0.05;

    std::vector<double> values() const;
    std::string describe() const;
};

struct ExperimentConfig {
    std::string experiment;
    std::string output_dir = ".";
    /// File name of the main CSV; defaults to "<experiment>.csv".
    std::string output;
    int threads = 1;
    /// 0 picks a cutoff per amplitude.
    int cutoff = 0;
    /// Fill runtime_ms; off by default so repeated runs are bit-identical.
    bool timing = false;
    Tolerances tol;
    EnumerationOptions enumeration;

    std::vector<double> alphas;
    bool optimize_alpha = false;
    AlphaGrid alpha_grid;
    std::vector<int> steps = {0, 1, 10, 100};
    std::vector<double> gamma_total_db;
    std::vector<double> gamma_segment_db;
    /// loss_sweep_gamma: also emit the uncorrected N = 0 point per total loss.
    bool include_direct = true;

    // outcome_hist
    std::string input = "0";
    double probability_floor = 1e-12;

    // wigner_compare
    std::vector<std::string> inputs = {"0", "+"};
    double wigner_half_width = 5.0;
    int wigner_points = 101;

    // cavity_scan
    std::vector<double> delta_over_kappa = {0.0, 0.5, 1.0, 2.0};
    std::vector<double> g2_over_kappa_gamma = {1e2, 1e4, 1e6};
    double kappa_r_over_kappa = 1.0;
    bool include_ideal_row = true;
};

/// Validates and fills defaults. Throws ConfigError.
ExperimentConfig parse_experiment_config(const Config& cfg);
ExperimentConfig load_experiment_config(const std::string& path);

int cutoff_for(const ExperimentConfig& cfg, double alpha);

struct SweepRecord {
    double alpha = 0.0;
    int N = 0;
    double gamma_total_db = 0.0;
    double gamma_segment_db = 0.0;
    PerrReport perr;
    double runtime_ms = 0.0;

    /// Throws NumericalError unless every p lies in [0, 1/2] and p_avg is
    /// their mean.
    void validate() const;
};

/// Average Helstrom error after (L_gamma o C)^N o L_gamma with the total
/// loss split into N + 1 equal segments.
PerrReport chain_perr(double alpha, int steps, double gamma_total, int cutoff,
                      const Tolerances& tol = default_tolerances());

struct OutcomeRow {
    int n1 = 0;
    int n2 = 0;
    double probability = 0.0;
};

struct OutcomeTable {
    double alpha = 0.0;
    int cutoff = 0;
    /// Probability of every enumerated outcome, including those below the floor.
    double total_probability = 0.0;
    std::vector<OutcomeRow> rows;
};

OutcomeTable run_outcome_hist(const ExperimentConfig& cfg);
std::vector<SweepRecord> run_lossless_repeat(const ExperimentConfig& cfg);
/// loss_sweep_alpha or loss_sweep_gamma, depending on cfg.experiment.
std::vector<SweepRecord> run_loss_sweeps(const ExperimentConfig& cfg);

struct WignerPanel {
    std::string input;
    /// "input", "uncorrected" or "corrected".
    std::string stage;
    WignerGrid grid;
    /// Weight kept by identity-frame post-selection (1 for other stages).
    double retained_probability = 1.0;
};

struct WignerComparison {
    double alpha = 0.0;
    double gamma_total_db = 0.0;
    int steps = 0;
    int cutoff = 0;
    std::vector<WignerPanel> panels;
};

WignerComparison run_wigner_compare(const ExperimentConfig& cfg);

struct CavityRow {
    /// False for the exact (1, i) reference row.
    bool scanned = true;
    double delta_over_kappa = 0.0;
    double g2_over_kappa_gamma = 0.0;
    double kappa_r_over_kappa = 1.0;
    ReflectionPair pair;
    double bell_fidelity = 0.0;
};

/// Bell fidelity uses the unit-magnitude version of each coefficient pair.
std::vector<CavityRow> run_cavity_scan(const ExperimentConfig& cfg);

using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records,
                     const Metadata& meta);
void write_wigner_csv(const std::string& path, const WignerGrid& grid, const Metadata& meta);

/// Runs the configured experiment and writes its files; returns their paths.
std::vector<std::string> run_experiment(const ExperimentConfig& cfg);

}  // namespace catlab
