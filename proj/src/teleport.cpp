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

#include "catlab/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

using Super = Eigen::Matrix4cd;

// vec(A B A^dag) = (conj(A) kron A) vec(B), column-major vec.
Super conjugation_superop(const Eigen::Matrix2cd& a) {
    Super s;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            s.block<2, 2>(2 * i, 2 * j) = std::conj(a(i, j)) * a;
        }
    }
    return s;
}

Eigen::Vector4cd vec(const Eigen::Matrix2cd& b) {
    return Eigen::Map<const Eigen::Vector4cd>(b.data());
}

Eigen::Matrix2cd unvec(const Eigen::Vector4cd& v) {
    return Eigen::Map<const Eigen::Matrix2cd>(v.data());
}

}  // namespace

CorrectionRule correction_rule(int n1, int n2) {
    if (n1 < 0 || n2 < 0) {
        throw std::invalid_argument("correction_rule: negative count");
    }
    const int total = n1 + n2;
    CorrectionRule r;
    r.loss_detected = (total % 2) == 1;
    r.projection_event = total == 0;
    const bool x = n1 > 0 && n2 > 0;
    const bool z = (total % 4) == 1 || (total % 4) == 2;
    r.pauli = static_cast<Pauli>((x ? 1 : 0) | (z ? 2 : 0));
    return r;
}

ConditionalMaps::ConditionalMaps(const BellState& bell)
    : cutoff_(bell.frame_out.cutoff()), frame_out_(bell.frame_out) {
    partner_[0] = bell.frame_in.zero.amps() / bell.scale;
    partner_[1] = bell.frame_in.one.amps() / bell.scale;
}

ConditionalMaps::Block ConditionalMaps::block(int total) const {
    if (total < 0 || total > max_total()) {
        throw std::out_of_range("ConditionalMaps::block: total photon number out of range");
    }
    Block b;
    b.total = total;
    b.lo = std::max(0, total - cutoff_ + 1);
    b.hi = std::min(total, cutoff_ - 1);
    const int width = b.hi - b.lo + 1;
    const Eigen::MatrixXd& u = BeamSplitterBlocks::shared().block(total);
    for (int k = 0; k < 2; ++k) {
        Eigen::VectorXcd partner(width);
        for (int n = b.lo; n <= b.hi; ++n) {
            partner[n - b.lo] = partner_[k][total - n];
        }
        b.rows[k] = u.middleCols(b.lo, width).cast<cplx>() * partner.asDiagonal();
    }
    return b;
}

ConditionalMap ConditionalMaps::map(int n1, int n2) const {
    if (n1 < 0 || n2 < 0) {
        throw std::invalid_argument("conditional map: negative count");
    }
    ConditionalMap m{n1, n2, Eigen::MatrixXcd::Zero(2, cutoff_)};
    if (n1 + n2 > max_total()) {
        return m;
    }
    const Block b = block(n1 + n2);
    for (int k = 0; k < 2; ++k) {
        m.map.row(k).segment(b.lo, b.hi - b.lo + 1) = b.rows[k].row(n1);
    }
    return m;
}

ConditionalMap conditional_map(int n1, int n2, const BellState& bell) {
    return ConditionalMaps(bell).map(n1, n2);
}

std::vector<OutcomeRecord> enumerate_outcomes(const DensityMatrix& rho_in, const BellState& bell,
                                              const EnumerationOptions& opts) {
    const int d = rho_in.cutoff();
    if (d != bell.frame_out.cutoff()) {
        throw DimensionMismatch("enumerate_outcomes: input and Bell cutoffs differ");
    }
    const ConditionalMaps maps(bell);
    const int cap = opts.max_total < 0 ? maps.max_total() : std::min(opts.max_total, maps.max_total());
    const Eigen::Matrix2cd& gram = maps.output_frame().gram;

    // rho = sum_a sign_a w_a w_a^dag
    const Eigen::MatrixXcd herm = 0.5 * (rho_in.mat() + rho_in.mat().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    const double total_trace = rho_in.trace();
    const double floor = 1e-18 * std::max(1.0, std::abs(total_trace));
    std::vector<int> keep;
    for (int a = 0; a < d; ++a) {
        if (std::abs(es.eigenvalues()[a]) > floor) {
            keep.push_back(a);
        }
    }
    const int rank = static_cast<int>(keep.size());
    Eigen::MatrixXcd w(d, rank);
    Eigen::VectorXd sign(rank);
    for (int a = 0; a < rank; ++a) {
        const double lam = es.eigenvalues()[keep[a]];
        w.col(a) = std::sqrt(std::abs(lam)) * es.eigenvectors().col(keep[a]);
        sign[a] = lam < 0 ? -1.0 : 1.0;
    }

    std::vector<OutcomeRecord> records;
    double cumulative = 0.0;
    const double goal = total_trace * (1.0 - opts.target);
    for (int total = 0; total <= cap; ++total) {
        const auto b = maps.block(total);
        const int width = b.hi - b.lo + 1;
        std::array<Eigen::MatrixXcd, 2> c;
        for (int k = 0; k < 2; ++k) {
            c[k] = b.rows[k] * w.middleRows(b.lo, width);
        }
        for (int n1 = 0; n1 <= total; ++n1) {
            OutcomeRecord r;
            r.n1 = n1;
            r.n2 = total - n1;
            r.correction = correction_rule(r.n1, r.n2);
            for (int k = 0; k < 2; ++k) {
                for (int kp = 0; kp < 2; ++kp) {
                    cplx acc = 0.0;
                    for (int a = 0; a < rank; ++a) {
                        acc += sign[a] * c[k](n1, a) * std::conj(c[kp](n1, a));
                    }
                    r.block(k, kp) = acc;
                }
            }
            r.probability = std::max(0.0, (r.block * gram).trace().real());
            cumulative += r.probability;
            records.push_back(std::move(r));
        }
        if (cumulative >= goal) {
            return records;
        }
    }
    std::ostringstream os;
    os << "enumeration reached total photon number " << cap << " with cumulative probability "
       << cumulative << " < " << goal;
    throw EnumerationCapReached(os.str());
}

Eigen::Matrix2cd correct_block(const Eigen::Matrix2cd& block, Pauli pauli,
                               const Eigen::Matrix2cd& gram) {
    if (!has_z(pauli)) {
        return apply_logical_pauli(block, pauli);
    }
    const Eigen::Matrix2cd p = pauli_matrix(pauli);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> gs(0.5 * (gram + gram.adjoint()));
    if (gs.eigenvalues().minCoeff() < 1e-12) {
        // Degenerate logical basis: fall back to rescaling the whole block.
        Eigen::Matrix2cd out = p * block * p.adjoint();
        const double before = (block * gram).trace().real();
        const double after = (out * gram).trace().real();
        return after > 0.0 ? Eigen::Matrix2cd(out * (before / after)) : out;
    }
    // Orthonormal coordinates of the span: x = S c with S = gram^(1/2).
    const Eigen::Matrix2cd s = gs.operatorSqrt();
    const Eigen::Matrix2cd s_inv = gs.operatorInverseSqrt();
    const Eigen::Matrix2cd phys = s * block * s.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(0.5 * (phys + phys.adjoint()));
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        const double w = es.eigenvalues()[i];
        if (w <= 0.0) {
            continue;
        }
        const Eigen::Vector2cd c = p * (s_inv * es.eigenvectors().col(i));
        const double n2 = (c.adjoint() * gram * c)(0, 0).real();
        out += (w / n2) * c * c.adjoint();
    }
    return out;
}

Eigen::Matrix2cd ec_channel_block(const DensityMatrix& rho_in, const BellState& bell,
                                  const EnumerationOptions& opts) {
    const auto records = enumerate_outcomes(rho_in, bell, opts);
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (const auto& r : records) {
        out += correct_block(r.block, r.correction.pauli, bell.frame_out.gram);
    }
    return out;
}

DensityMatrix ec_channel(const DensityMatrix& rho_in, double alpha_out, double alpha_in_bell,
                         const EnumerationOptions& opts) {
    const BellState bell = bell_state(alpha_in_bell, alpha_out, rho_in.cutoff());
    return bell.frame_out.embed(ec_channel_block(rho_in, bell, opts));
}

TeleportChannel::TeleportChannel(double alpha, double gamma, int cutoff,
                                 std::optional<double> alpha_bell, double lump_threshold)
    : frame_(make_frame(alpha, cutoff)),
      gamma_(gamma),
      alpha_bell_(alpha_bell.value_or(alpha * std::sqrt(1.0 - gamma))) {
    for (auto& s : linear_) {
        s.setZero();
    }
    const BellState bell = bell_state(alpha_bell_, alpha, cutoff);
    const ConditionalMaps maps(bell);

    // Columns 2l + j hold K_l |j_L>.
    const KrausSet kraus_set(gamma, cutoff);
    std::vector<Eigen::VectorXcd> branches;
    for (int l = 0; l < cutoff; ++l) {
        const Eigen::VectorXcd v0 = kraus_set.apply(l, frame_.zero.amps());
        const Eigen::VectorXcd v1 = kraus_set.apply(l, frame_.one.amps());
        if (std::max(v0.squaredNorm(), v1.squaredNorm()) < 1e-32) {
            continue;
        }
        branches.push_back(v0);
        branches.push_back(v1);
    }
    const int nb = static_cast<int>(branches.size());
    Eigen::MatrixXcd w(cutoff, nb);
    for (int c = 0; c < nb; ++c) {
        w.col(c) = branches[c];
    }

    for (int total = 0; total <= maps.max_total(); ++total) {
        const auto b = maps.block(total);
        const int width = b.hi - b.lo + 1;
        std::array<Eigen::MatrixXcd, 2> c;
        for (int k = 0; k < 2; ++k) {
            c[k] = b.rows[k] * w.middleRows(b.lo, width);
        }
        for (int n1 = 0; n1 <= total; ++n1) {
            Super t = Super::Zero();
            for (int l = 0; 2 * l < nb; ++l) {
                Eigen::Matrix2cd a;
                for (int k = 0; k < 2; ++k) {
                    a(k, 0) = c[k](n1, 2 * l);
                    a(k, 1) = c[k](n1, 2 * l + 1);
                }
                t += conjugation_superop(a);
            }
            add_outcome(t, correction_rule(n1, total - n1).pauli, lump_threshold);
        }
    }
}

void TeleportChannel::add_outcome(const Super& map, Pauli pauli, double lump_threshold) {
    const Super correction = conjugation_superop(pauli_matrix(pauli));
    if (!has_z(pauli)) {
        linear_[static_cast<int>(pauli)] += correction * map;
        return;
    }
    if (map.cwiseAbs().maxCoeff() < lump_threshold) {
        linear_[static_cast<int>(pauli)] += correction * map;
        return;
    }
    z_outcomes_.push_back({map, pauli});
}

Eigen::Matrix2cd TeleportChannel::apply_z(const ZOutcome& z, const Eigen::Vector4cd& vin) const {
    return correct_block(unvec(z.map * vin), z.pauli, frame_.gram);
}

Eigen::Matrix2cd TeleportChannel::step(const Eigen::Matrix2cd& block) const {
    const Eigen::Vector4cd vin = vec(block);
    Eigen::Vector4cd acc = Eigen::Vector4cd::Zero();
    for (const auto& s : linear_) {
        acc += s * vin;
    }
    Eigen::Matrix2cd out = unvec(acc);
    for (const auto& z : z_outcomes_) {
        out += apply_z(z, vin);
    }
    return out;
}

std::array<Eigen::Matrix2cd, 4> TeleportChannel::step_by_correction(
    const Eigen::Matrix2cd& block) const {
    const Eigen::Vector4cd vin = vec(block);
    std::array<Eigen::Matrix2cd, 4> out;
    for (int p = 0; p < 4; ++p) {
        out[p] = unvec(linear_[p] * vin);
    }
    for (const auto& z : z_outcomes_) {
        out[static_cast<int>(z.pauli)] += apply_z(z, vin);
    }
    return out;
}

ChainResult simulate_chain(const LogicalCoeffState& input, const SegmentPlan& plan, double alpha,
                           const ChainOptions& opts) {
    if (plan.steps == 0) {
        ChainResult r;
        r.frame = input.frame;
        r.segment_gamma = plan.segment.fraction;
        r.steps = 0;
        r.frames_tracked = opts.track_frames;
        r.frame_blocks.fill(Eigen::Matrix2cd::Zero());
        r.frame_blocks[0] = input.block();
        r.output = apply_loss(input.density(), plan.segment.fraction, opts.tol);
        return r;
    }
    const TeleportChannel channel(alpha, plan.segment.fraction, input.frame.cutoff(),
                                  opts.alpha_bell);
    return simulate_chain(input, channel, plan.steps, opts);
}

ChainResult simulate_chain(const LogicalCoeffState& input, const TeleportChannel& channel,
                           int steps, const ChainOptions& opts) {
    if (steps < 0) {
        throw std::invalid_argument("simulate_chain: negative step count");
    }
    if (std::abs(input.frame.alpha - channel.alpha()) > 1e-12 ||
        input.frame.cutoff() != channel.cutoff()) {
        throw DimensionMismatch("simulate_chain: input frame does not match the channel");
    }
    ChainResult r;
    r.frame = channel.frame();
    r.segment_gamma = channel.gamma();
    r.steps = steps;
    r.frames_tracked = opts.track_frames;
    r.frame_blocks.fill(Eigen::Matrix2cd::Zero());
    r.frame_blocks[0] = input.block();
    for (int s = 0; s < steps; ++s) {
        if (!opts.track_frames) {
            r.frame_blocks[0] = channel.step(r.frame_blocks[0]);
            continue;
        }
        std::array<Eigen::Matrix2cd, 4> next;
        next.fill(Eigen::Matrix2cd::Zero());
        for (int f = 0; f < 4; ++f) {
            if (r.frame_blocks[f].cwiseAbs().maxCoeff() == 0.0) {
                continue;
            }
            const auto parts = channel.step_by_correction(r.frame_blocks[f]);
            for (int c = 0; c < 4; ++c) {
                next[f ^ c] += parts[c];
            }
        }
        r.frame_blocks = next;
    }
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const auto& b : r.frame_blocks) {
        sum += b;
    }
    r.output = apply_loss(r.frame.embed(sum), r.segment_gamma, opts.tol);
    return r;
}

PostselectedState postselect_identity_frame(const ChainResult& result, const Tolerances& tol) {
    if (result.steps > 0 && !result.frames_tracked) {
        throw std::invalid_argument(
            "postselect_identity_frame: chain was run without frame tracking");
    }
    const DensityMatrix kept =
        apply_loss(result.frame.embed(result.frame_blocks[0]), result.segment_gamma, tol);
    const double p = kept.trace();
    if (!(p > 0.0)) {
        throw ZeroProbability("no trajectory ends in the identity frame");
    }
    return {kept.normalized(), p};
}

}  // namespace catlab
