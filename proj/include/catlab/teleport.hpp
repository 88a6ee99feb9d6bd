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

// Teleportation-based error correction of the cat code.
//
// The input (mode 1) meets the first half of a logical Bell state (mode 2) on
// a 50:50 beamsplitter and both outputs are counted with photon-number
// resolving detectors, giving (n1, n2). The remaining Bell mode (mode 3) is
// left in span{|0_L>, |1_L>}, so every outcome is a 2 x D map from the input
// Fock vector to output logical coefficients. Outcomes are enumerated
// exactly; corrections are applied to the coefficients before averaging.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "catlab/cat_code.hpp"
#include "catlab/loss.hpp"

namespace catlab {

struct CorrectionRule {
    Pauli pauli = Pauli::I;
    /// Odd total photon number: a single-photon loss was detected.
    bool loss_detected = false;
    /// (0, 0): output is projected onto |+_L> regardless of the input.
    bool projection_event = false;
};

/// X iff both counts are nonzero; Z iff (n1 + n2) mod 4 is 1 or 2.
CorrectionRule correction_rule(int n1, int n2);

struct ConditionalMap {
    int n1 = 0;
    int n2 = 0;
    /// 2 x D: input Fock amplitudes -> unnormalized (mu', nu') in the Bell
    /// state's output frame.
    Eigen::MatrixXcd map;
};

/// Conditional maps of one Bell state, organized by total photon number.
class ConditionalMaps {
   public:
    explicit ConditionalMaps(const BellState& bell);

    int cutoff() const { return cutoff_; }
    int max_total() const { return 2 * cutoff_ - 2; }
    const LogicalFrame& output_frame() const { return frame_out_; }

    /// All maps with n1 + n2 == total. rows[k](n1, n - lo) is the |k_L>
    /// coefficient produced by input photon number n, lo <= n <= hi.
    struct Block {
        int total = 0;
        int lo = 0;
        int hi = -1;
        std::array<Eigen::MatrixXcd, 2> rows;
    };
    Block block(int total) const;

    ConditionalMap map(int n1, int n2) const;

   private:
    int cutoff_;
    LogicalFrame frame_out_;
    // Bell mode-2 components divided by the Bell normalization.
    std::array<Eigen::VectorXcd, 2> partner_;
};

ConditionalMap conditional_map(int n1, int n2, const BellState& bell);

struct OutcomeRecord {
    int n1 = 0;
    int n2 = 0;
    double probability = 0.0;
    CorrectionRule correction;
    /// Conditional logical block (before correction), trace = probability.
    Eigen::Matrix2cd block;
};

struct EnumerationOptions {
    /// Stop after the first complete total-photon block where the
    /// cumulative probability reaches Tr(rho) * (1 - target).
    double target = default_tolerances().enum_target;
    /// Largest total photon number to visit; -1 means 2D - 2.
    int max_total = -1;
};

/// Outcomes in increasing n1 + n2 (then n1). Throws EnumerationCapReached if
/// the cap is hit before the probability target.
std::vector<OutcomeRecord> enumerate_outcomes(const DensityMatrix& rho_in, const BellState& bell,
                                              const EnumerationOptions& opts = {});

/// Applies the correction to a conditional block without changing the
/// outcome probability. X and I are plain conjugations. Z does not preserve
/// the norm of a non-orthogonal basis, so each eigencomponent of the
/// conditional state is corrected and renormalized on its own, as it would be
/// on a single pure trajectory.
Eigen::Matrix2cd correct_block(const Eigen::Matrix2cd& block, Pauli pauli,
                               const Eigen::Matrix2cd& gram);

/// Corrected output of one circuit application, as a logical block in the
/// alpha_out frame.
Eigen::Matrix2cd ec_channel_block(const DensityMatrix& rho_in, const BellState& bell,
                                  const EnumerationOptions& opts = {});

/// Error-correction circuit C on an arbitrary input state. Output lives in
/// the alpha_out frame (same cutoff as the input).
DensityMatrix ec_channel(const DensityMatrix& rho_in, double alpha_out, double alpha_in_bell,
                         const EnumerationOptions& opts = {});

/// C o L_gamma restricted to inputs in the logical span of a fixed frame.
///
/// Every PNRD outcome reduces to a map on 2 x 2 coefficient blocks. Outcomes
/// needing no Z correction are summed into one linear map per correction;
/// Z-corrected outcomes are kept individually because their rescaling
/// depends on the block. Z outcomes whose map is below `lump_threshold`
/// (max entry) are folded into the linear part without rescaling.
/// Immutable after construction.
class TeleportChannel {
   public:
    TeleportChannel(double alpha, double gamma, int cutoff,
                    std::optional<double> alpha_bell = std::nullopt,
                    double lump_threshold = 1e-20);

    double alpha() const { return frame_.alpha; }
    double alpha_bell() const { return alpha_bell_; }
    double gamma() const { return gamma_; }
    int cutoff() const { return frame_.cutoff(); }
    const LogicalFrame& frame() const { return frame_; }
    std::size_t individual_outcomes() const { return z_outcomes_.size(); }

    /// Loss segment followed by the corrected circuit.
    Eigen::Matrix2cd step(const Eigen::Matrix2cd& block) const;

    /// As `step`, with the output split by the correction applied
    /// (indexed by static_cast<int>(Pauli)).
    std::array<Eigen::Matrix2cd, 4> step_by_correction(const Eigen::Matrix2cd& block) const;

   private:
    using Super = Eigen::Matrix4cd;
    struct ZOutcome {
        Super map;
        Pauli pauli;
    };

    void add_outcome(const Super& map, Pauli pauli, double lump_threshold);
    Eigen::Matrix2cd apply_z(const ZOutcome& z, const Eigen::Vector4cd& vin) const;

    LogicalFrame frame_;
    double gamma_;
    double alpha_bell_;
    std::array<Super, 4> linear_;
    std::vector<ZOutcome> z_outcomes_;
};

struct ChainOptions {
    /// Keep the accumulated correction of every trajectory (needed for
    /// post-selection).
    bool track_frames = false;
    /// Bell input-mode amplitude; defaults to alpha * sqrt(1 - gamma).
    std::optional<double> alpha_bell;
    Tolerances tol = default_tolerances();
};

struct ChainResult {
    DensityMatrix output;
    LogicalFrame frame;
    double segment_gamma = 0.0;
    int steps = 0;
    bool frames_tracked = false;
    /// Logical blocks just before the final loss segment, split by the
    /// accumulated correction. Without tracking, everything sits in I.
    std::array<Eigen::Matrix2cd, 4> frame_blocks;
};

/// (L_gamma o C)^N o L_gamma applied to a logical input.
ChainResult simulate_chain(const LogicalCoeffState& input, const SegmentPlan& plan, double alpha,
                           const ChainOptions& opts = {});

/// Same, reusing a channel built for the plan's segment loss.
ChainResult simulate_chain(const LogicalCoeffState& input, const TeleportChannel& channel,
                           int steps, const ChainOptions& opts = {});

struct PostselectedState {
    DensityMatrix state;
    double retained_probability = 0.0;
};

/// Trajectories whose accumulated correction is the identity, renormalized.
/// Throws ZeroProbability if none survive.
PostselectedState postselect_identity_frame(const ChainResult& result,
                                            const Tolerances& tol = default_tolerances());

}  // namespace catlab
