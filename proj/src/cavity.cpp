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

#include "catlab/cavity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

constexpr cplx kI(0.0, 1.0);

void check_pair(const ReflectionPair& pair, const ReflectOptions& opts) {
    if (std::abs(pair.r_up) == 0.0) {
        throw NonIdealReflection("reflect_cat: r_up = 0 has no phase reference");
    }
    if (opts.allow_nonideal) {
        return;
    }
    for (cplx r : {pair.r_up, pair.r_down}) {
        if (std::abs(std::abs(r) - 1.0) > opts.ideal_tol) {
            std::ostringstream os;
            os << "reflect_cat: |r| = " << std::abs(r) << " is not within " << opts.ideal_tol
               << " of 1";
            throw NonIdealReflection(os.str());
        }
    }
}

CoherentSuperposition scale_mode(const CoherentSuperposition& s, int mode, cplx r) {
    if (mode < 0 || mode >= s.modes) {
        throw std::invalid_argument("reflect_cat: mode out of range");
    }
    CoherentSuperposition out = s;
    for (CoherentTerm& t : out.terms) {
        t.amps[mode] *= r;
    }
    return out;
}

cplx product_overlap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx o = 1.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        o *= coherent_overlap(a[m], b[m]);
    }
    return o;
}

// Fock amplitudes of |beta> without the leakage check; callers pick a
// cutoff large enough for their own purposes.
Eigen::VectorXcd coherent_amps(cplx beta, int cutoff) {
    Eigen::VectorXcd v(cutoff);
    v[0] = std::exp(-0.5 * std::norm(beta));
    for (int n = 1; n < cutoff; ++n) {
        v[n] = v[n - 1] * beta / std::sqrt(static_cast<double>(n));
    }
    return v;
}

}  // namespace

void CavityParams::validate() const {
    if (!(kappa > 0.0) || kappa_r < 0.0 || kappa_r > kappa || gamma_at < 0.0 || g < 0.0) {
        throw std::invalid_argument(
            "cavity parameters need kappa > 0, 0 <= kappa_r <= kappa, gamma_at >= 0, g >= 0");
    }
}

double ReflectionPair::relative_phase() const {
    const double phi = std::arg(r_down / r_up);
    return phi <= -std::numbers::pi ? phi + 2.0 * std::numbers::pi : phi;
}

ReflectionPair ReflectionPair::unit_magnitude() const {
    return {std::polar(1.0, std::arg(r_up)), std::polar(1.0, std::arg(r_down))};
}

ReflectionPair reflection(const CavityParams& p) {
    p.validate();
    const cplx a = kI * p.delta + p.kappa;
    const cplx b = kI * p.delta + p.gamma_at;
    ReflectionPair r;
    r.r_up = 1.0 - 2.0 * p.kappa_r * b / (a * b + p.g * p.g);
    r.r_down = 1.0 - 2.0 * p.kappa_r / a;
    return r;
}

CoherentSuperposition CoherentSuperposition::product(std::vector<cplx> amps) {
    CoherentSuperposition s;
    s.modes = static_cast<int>(amps.size());
    s.terms.push_back({1.0, std::move(amps)});
    return s;
}

cplx CoherentSuperposition::inner(const CoherentSuperposition& other) const {
    if (modes != other.modes) {
        throw DimensionMismatch("CoherentSuperposition::inner: mode count mismatch");
    }
    cplx s = 0.0;
    for (const CoherentTerm& a : terms) {
        for (const CoherentTerm& b : other.terms) {
            s += std::conj(a.coeff) * b.coeff * product_overlap(a.amps, b.amps);
        }
    }
    return s;
}

double CoherentSuperposition::norm_squared() const { return std::max(0.0, inner(*this).real()); }

CoherentSuperposition CoherentSuperposition::scaled(cplx factor) const {
    CoherentSuperposition out = *this;
    for (CoherentTerm& t : out.terms) {
        t.coeff *= factor;
    }
    return out;
}

CoherentSuperposition CoherentSuperposition::plus(const CoherentSuperposition& other) const {
    if (modes != other.modes) {
        throw DimensionMismatch("CoherentSuperposition::plus: mode count mismatch");
    }
    CoherentSuperposition out = *this;
    out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
    return out;
}

FockVector CoherentSuperposition::to_fock(int cutoff) const {
    if (modes != 1) {
        throw DimensionMismatch("to_fock: expected one mode");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
    for (const CoherentTerm& t : terms) {
        v += t.coeff * coherent_amps(t.amps[0], cutoff);
    }
    return FockVector(std::move(v));
}

Eigen::MatrixXcd CoherentSuperposition::to_fock_two_mode(int cutoff) const {
    if (modes != 2) {
        throw DimensionMismatch("to_fock_two_mode: expected two modes");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (const CoherentTerm& t : terms) {
        m += t.coeff * coherent_amps(t.amps[0], cutoff) * coherent_amps(t.amps[1], cutoff).transpose();
    }
    return m;
}

AtomFieldState reflect_cat(const CoherentSuperposition& field, int mode, cplx c_up, cplx c_down,
                           const ReflectionPair& pair, const ReflectOptions& opts) {
    AtomFieldState s{field.scaled(c_up), field.scaled(c_down)};
    return reflect_cat(s, mode, pair, opts);
}

AtomFieldState reflect_cat(const AtomFieldState& state, int mode, const ReflectionPair& pair,
                           const ReflectOptions& opts) {
    check_pair(pair, opts);
    const cplx frame = std::polar(1.0, -std::arg(pair.r_up));
    return {scale_mode(state.up, mode, pair.r_up * frame),
            scale_mode(state.down, mode, pair.r_down * frame)};
}

AtomProjection project_atom_plus(const AtomFieldState& state) {
    const double total = state.norm_squared();
    const CoherentSuperposition f = state.up.plus(state.down).scaled(1.0 / std::sqrt(2.0));
    const double kept = f.norm_squared();
    if (!(total > 0.0) || !(kept > 1e-300)) {
        throw ZeroProbability("project_atom_plus: atom measurement has zero probability");
    }
    return {f.scaled(1.0 / std::sqrt(kept)), kept / total};
}

CavityBell bell_from_cavity(double alpha, const ReflectionPair& entangle, int cutoff,
                            const ReflectOptions& opts, const ReflectionPair& prepare) {
    const double h = 1.0 / std::sqrt(2.0);
    CoherentSuperposition field = CoherentSuperposition::product({alpha, alpha});
    double overall = 1.0;
    for (int mode = 0; mode < 2; ++mode) {
        const AtomProjection cat = project_atom_plus(reflect_cat(field, mode, h, h, prepare, opts));
        field = cat.field;
        overall *= cat.probability;
    }
    AtomFieldState s = reflect_cat(field, 0, h, h, entangle, opts);
    s = reflect_cat(s, 1, entangle, opts);
    const AtomProjection bell = project_atom_plus(s);

    CavityBell out;
    out.field = bell.field;
    out.amps = bell.field.to_fock_two_mode(cutoff);
    const double n = out.amps.norm();
    if (n > 0.0) {
        out.amps /= n;
    }
    out.success_probability = bell.probability;
    out.overall_probability = overall * bell.probability;
    return out;
}

CavityBell bell_from_cavity(double alpha, const CavityParams& entangle, int cutoff,
                            const ReflectOptions& opts, const ReflectionPair& prepare) {
    return bell_from_cavity(alpha, reflection(entangle), cutoff, opts, prepare);
}

double bell_fidelity(const CavityBell& state, double alpha, int cutoff) {
    const BellState target = bell_state(alpha, alpha, cutoff);
    if (target.amps.rows() != state.amps.rows() || target.amps.cols() != state.amps.cols()) {
        throw DimensionMismatch("bell_fidelity: cutoff mismatch");
    }
    const cplx o = (target.amps.conjugate().cwiseProduct(state.amps)).sum();
    return std::min(1.0, std::norm(o));
}

}  // namespace catlab
