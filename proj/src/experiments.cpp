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

#include "catlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

const std::vector<std::string> kExperiments = {"outcome_hist",     "lossless_repeat",
                                               "loss_sweep_alpha", "loss_sweep_gamma",
                                               "wigner_compare",   "cavity_scan"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (double x : v) {
        s += (s.empty() ? "" : " ") + fmt(x);
    }
    return s;
}

// Runs fn(0), ..., fn(n - 1) on up to `threads` workers. Results keep the
// index order; the first failing index rethrows.
template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int k = std::max(1, std::min(threads, n));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

// Reads a loss quantity given either in dB or as a fraction.
std::vector<double> loss_list_db(const Config& c, const std::string& key,
                                 std::vector<double> fallback_db) {
    const std::string key_db = key + "_db";
    if (c.has(key_db) && c.has(key)) {
        throw ConfigError("give either " + key_db + " or " + key + ", not both");
    }
    if (c.has(key)) {
        std::vector<double> out;
        for (double f : c.get_doubles(key, {})) {
            if (!(f >= 0.0 && f < 1.0)) {
                throw ConfigError(key + " values must lie in [0, 1)");
            }
            out.push_back(fraction_to_db(f));
        }
        return out;
    }
    std::vector<double> out = c.get_doubles(key_db, std::move(fallback_db));
    for (double d : out) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ConfigError(key_db + " values must be finite and >= 0");
        }
    }
    return out;
}

void require_nonempty(bool ok, const std::string& what) {
    if (!ok) {
        throw ConfigError(what + " must not be empty");
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string file_label(const std::string& pauli) {
    static const std::map<std::string, std::string> names = {
        {"0", "zero"}, {"1", "one"}, {"+", "plus"}, {"-", "minus"}, {"+i", "plus_i"}, {"-i", "minus_i"}};
    return names.at(pauli);
}

Metadata common_metadata(const ExperimentConfig& cfg) {
    const Tolerances& t = cfg.tol;
    Metadata m;
    m.emplace_back("experiment", cfg.experiment);
    m.emplace_back("cutoff", cfg.cutoff > 0 ? std::to_string(cfg.cutoff)
                                            : "auto ceil(b^2 + 6b + 20), b = sqrt(2) alpha");
    m.emplace_back("tolerances", "norm " + fmt(t.norm_tol) + " leak " + fmt(t.leak_tol) +
                                     " herm " + fmt(t.herm_tol) + " psd " + fmt(t.psd_tol) +
                                     " trace " + fmt(t.trace_tol) + " prob " + fmt(t.prob_tol) +
                                     " kraus_tail " + fmt(t.kraus_tail) + " eig_floor " +
                                     fmt(t.eig_floor));
    m.emplace_back("enumeration", "target " + fmt(cfg.enumeration.target) + " max_total " +
                                      (cfg.enumeration.max_total < 0
                                           ? std::string("2D-2")
                                           : std::to_string(cfg.enumeration.max_total)));
    m.emplace_back("channel_enumeration", "all totals up to 2D-2, loss branches of weight >= 1e-32");
    return m;
}

void write_metadata(std::ostream& os, const Metadata& meta) {
    for (const auto& [k, v] : meta) {
        os << "# " << k << " = " << v << "\n";
    }
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream f(path);
    if (!f) {
        throw ConfigError("cannot write " + path);
    }
    f.precision(12);
    return f;
}

struct SweepPoint {
    double alpha;
    int steps;
    double total_db;
};

SweepRecord evaluate(const ExperimentConfig& cfg, const SweepPoint& pt) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepRecord r;
    r.alpha = pt.alpha;
    r.N = pt.steps;
    r.gamma_total_db = pt.total_db;
    const SegmentPlan plan = plan_segments(LossSpec::from_db(pt.total_db), pt.steps);
    r.gamma_segment_db = plan.segment.db();
    r.perr = chain_perr(pt.alpha, pt.steps, plan.total.fraction, cutoff_for(cfg, pt.alpha), cfg.tol);
    r.runtime_ms = cfg.timing ? elapsed_ms(t0) : 0.0;
    r.validate();
    return r;
}

std::vector<SweepRecord> evaluate_all(const ExperimentConfig& cfg,
                                      const std::vector<SweepPoint>& pts) {
    return parallel_map<SweepRecord>(static_cast<int>(pts.size()), cfg.threads,
                                     [&](int i) { return evaluate(cfg, pts[i]); });
}

// Keeps the lowest-p_avg record of each run of equal (total, N) keys; ties
// go to the smaller alpha.
std::vector<SweepRecord> argmin_alpha(std::vector<SweepRecord> recs) {
    std::map<std::pair<double, int>, SweepRecord> best;
    for (const SweepRecord& r : recs) {
        const auto key = std::make_pair(r.gamma_total_db, r.N);
        auto it = best.find(key);
        if (it == best.end() || r.perr.p_avg < it->second.perr.p_avg ||
            (r.perr.p_avg == it->second.perr.p_avg && r.alpha < it->second.alpha)) {
            best[key] = r;
        }
    }
    std::vector<SweepRecord> out;
    for (auto& [k, r] : best) {
        out.push_back(r);
    }
    return out;
}

void sort_records(std::vector<SweepRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.gamma_total_db, a.N, a.alpha) < std::tie(b.gamma_total_db, b.N, b.alpha);
    });
}

std::vector<double> alpha_values(const ExperimentConfig& cfg) {
    return cfg.optimize_alpha ? cfg.alpha_grid.values() : cfg.alphas;
}

}  // namespace

std::vector<double> AlphaGrid::values() const {
    std::vector<double> v;
    const int n = static_cast<int>(std::floor((max - min) / step + 1e-9));
    for (int i = 0; i <= n; ++i) {
        // Round to the step's decimal grid so 0.5 + 9 * 0.05 prints as 0.95.
        v.push_back(std::round((min + i * step) * 1e9) / 1e9);
    }
    return v;
}

std::string AlphaGrid::describe() const {
    return fmt(min) + ":" + fmt(step) + ":" + fmt(max) + " (" + std::to_string(values().size()) +
           " points)";
}

ExperimentConfig parse_experiment_config(const Config& c) {
    ExperimentConfig cfg;
    cfg.experiment = c.get_string("experiment", "");
    if (std::find(kExperiments.begin(), kExperiments.end(), cfg.experiment) == kExperiments.end()) {
        throw ConfigError("unknown or missing experiment '" + cfg.experiment + "'");
    }
    cfg.output_dir = c.get_string("output_dir", cfg.output_dir);
    cfg.output = c.get_string("output", cfg.experiment + ".csv");
    cfg.threads = c.get_int("threads", cfg.threads);
    cfg.cutoff = c.get_int("cutoff", cfg.cutoff);
    cfg.timing = c.get_bool("timing", cfg.timing);
    if (cfg.threads < 1) {
        throw ConfigError("threads must be >= 1");
    }
    if (cfg.cutoff < 0 || cfg.cutoff == 1) {
        throw ConfigError("cutoff must be 0 (automatic) or >= 2");
    }

    Tolerances& t = cfg.tol;
    t.norm_tol = c.get_double("tolerances.norm_tol", t.norm_tol);
    t.leak_tol = c.get_double("tolerances.leak_tol", t.leak_tol);
    t.herm_tol = c.get_double("tolerances.herm_tol", t.herm_tol);
    t.psd_tol = c.get_double("tolerances.psd_tol", t.psd_tol);
    t.trace_tol = c.get_double("tolerances.trace_tol", t.trace_tol);
    t.prob_tol = c.get_double("tolerances.prob_tol", t.prob_tol);
    t.kraus_tail = c.get_double("tolerances.kraus_tail", t.kraus_tail);
    t.eig_floor = c.get_double("tolerances.eig_floor", t.eig_floor);
    t.enum_target = c.get_double("enumeration.target", t.enum_target);
    cfg.enumeration.target = t.enum_target;
    cfg.enumeration.max_total = c.get_int("enumeration.max_total", -1);

    const std::string& e = cfg.experiment;
    const bool sweep = e == "lossless_repeat" || e == "loss_sweep_alpha" || e == "loss_sweep_gamma";
    if (sweep) {
        cfg.optimize_alpha = c.get_bool("optimize_alpha", e == "loss_sweep_gamma");
        cfg.alpha_grid.min = c.get_double("alpha_grid.min", cfg.alpha_grid.min);
        cfg.alpha_grid.max = c.get_double("alpha_grid.max", cfg.alpha_grid.max);
        cfg.alpha_grid.step = c.get_double("alpha_grid.step", cfg.alpha_grid.step);
        if (!(cfg.alpha_grid.step > 0.0) || cfg.alpha_grid.max < cfg.alpha_grid.min ||
            cfg.alpha_grid.min < 0.0) {
            throw ConfigError("alpha_grid needs 0 <= min <= max and step > 0");
        }
        cfg.alphas = c.get_doubles("alpha", cfg.optimize_alpha ? std::vector<double>{}
                                                               : cfg.alpha_grid.values());
        if (cfg.optimize_alpha && !cfg.alphas.empty()) {
            throw ConfigError("give either alpha or optimize_alpha = true, not both");
        }
        require_nonempty(cfg.optimize_alpha || !cfg.alphas.empty(), "alpha");
    }
    if (e == "lossless_repeat" || e == "loss_sweep_alpha") {
        cfg.steps = c.get_ints("N", cfg.steps);
        require_nonempty(!cfg.steps.empty(), "N");
        for (int n : cfg.steps) {
            if (n < 0) {
                throw ConfigError("N values must be >= 0");
            }
        }
    }
    if (e == "loss_sweep_alpha" || e == "loss_sweep_gamma") {
        cfg.gamma_total_db = loss_list_db(c, "gamma_total", {1.0});
        require_nonempty(!cfg.gamma_total_db.empty(), "gamma_total_db");
    }
    if (e == "loss_sweep_gamma") {
        cfg.gamma_segment_db = loss_list_db(c, "gamma_segment", {0.1, 0.01, 0.001});
        require_nonempty(!cfg.gamma_segment_db.empty(), "gamma_segment_db");
        cfg.include_direct = c.get_bool("include_direct", cfg.include_direct);
        for (double total : cfg.gamma_total_db) {
            for (double seg : cfg.gamma_segment_db) {
                steps_for_segment_db(total, seg);
            }
        }
    }
    if (e == "outcome_hist") {
        cfg.alphas = c.get_doubles("alpha", {2.5});
        require_nonempty(cfg.alphas.size() == 1, "a single alpha");
        cfg.input = c.get_string("input", cfg.input);
        cfg.probability_floor = c.get_double("probability_floor", cfg.probability_floor);
        try {
            parse_pauli_label(cfg.input);
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }
    if (e == "wigner_compare") {
        cfg.alphas = c.get_doubles("alpha", {3.0});
        require_nonempty(cfg.alphas.size() == 1, "a single alpha");
        cfg.gamma_total_db = loss_list_db(c, "gamma_total", {1.0});
        require_nonempty(cfg.gamma_total_db.size() == 1, "a single gamma_total");
        cfg.steps = c.get_ints("N", {100});
        require_nonempty(cfg.steps.size() == 1 && cfg.steps[0] >= 0, "a single N >= 0");
        cfg.inputs = c.get_strings("inputs", cfg.inputs);
        require_nonempty(!cfg.inputs.empty(), "inputs");
        for (const std::string& s : cfg.inputs) {
            try {
                parse_pauli_label(s);
            } catch (const std::invalid_argument& ex) {
                throw ConfigError(ex.what());
            }
        }
        cfg.wigner_half_width = c.get_double("grid.half_width", cfg.wigner_half_width);
        cfg.wigner_points = c.get_int("grid.points", cfg.wigner_points);
        if (!(cfg.wigner_half_width > 0.0) || cfg.wigner_points < 2) {
            throw ConfigError("grid needs half_width > 0 and points >= 2");
        }
    }
    if (e == "cavity_scan") {
        cfg.alphas = c.get_doubles("alpha", {2.0});
        require_nonempty(cfg.alphas.size() == 1, "a single alpha");
        cfg.delta_over_kappa = c.get_doubles("delta_over_kappa", cfg.delta_over_kappa);
        cfg.g2_over_kappa_gamma = c.get_doubles("g2_over_kappa_gamma", cfg.g2_over_kappa_gamma);
        cfg.kappa_r_over_kappa = c.get_double("kappa_r_over_kappa", cfg.kappa_r_over_kappa);
        cfg.include_ideal_row = c.get_bool("include_ideal_row", cfg.include_ideal_row);
        require_nonempty(!cfg.delta_over_kappa.empty(), "delta_over_kappa");
        require_nonempty(!cfg.g2_over_kappa_gamma.empty(), "g2_over_kappa_gamma");
        if (cfg.kappa_r_over_kappa < 0.0 || cfg.kappa_r_over_kappa > 1.0) {
            throw ConfigError("kappa_r_over_kappa must lie in [0, 1]");
        }
        for (double g2 : cfg.g2_over_kappa_gamma) {
            if (g2 < 0.0) {
                throw ConfigError("g2_over_kappa_gamma must be >= 0");
            }
        }
    }
    for (double a : cfg.alphas) {
        if (!(a >= 0.0) || a > 20.0) {
            throw ConfigError("alpha values must lie in [0, 20]");
        }
    }
    c.reject_unused();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    return parse_experiment_config(Config::load(path));
}

int cutoff_for(const ExperimentConfig& cfg, double alpha) {
    return cfg.cutoff > 0 ? cfg.cutoff : cutoff_for_alpha(alpha);
}

void SweepRecord::validate() const {
    const double ps[3] = {perr.p_x, perr.p_y, perr.p_z};
    for (double p : ps) {
        if (!(p >= 0.0 && p <= 0.5)) {
            throw NumericalError("sweep record has an error probability outside [0, 1/2]");
        }
    }
    if (std::abs(perr.p_avg - (ps[0] + ps[1] + ps[2]) / 3.0) > 1e-15) {
        throw NumericalError("sweep record p_avg is not the mean of its components");
    }
}

PerrReport chain_perr(double alpha, int steps, double gamma_total, int cutoff,
                      const Tolerances& tol) {
    const SegmentPlan plan = plan_segments(LossSpec{gamma_total}, steps);
    const LogicalFrame frame = make_frame(alpha, cutoff, tol);
    if (steps == 0) {
        return avg_perr(
            [&](const LogicalCoeffState& s) {
                return apply_loss(s.density(), plan.segment.fraction, tol);
            },
            frame, tol);
    }
    const TeleportChannel channel(alpha, plan.segment.fraction, cutoff);
    ChainOptions opts;
    opts.tol = tol;
    return avg_perr(
        [&](const LogicalCoeffState& s) { return simulate_chain(s, channel, steps, opts).output; },
        channel.frame(), tol);
}

OutcomeTable run_outcome_hist(const ExperimentConfig& cfg) {
    OutcomeTable t;
    t.alpha = cfg.alphas.at(0);
    t.cutoff = cutoff_for(cfg, t.alpha);
    const LogicalFrame frame = make_frame(t.alpha, t.cutoff, cfg.tol);
    const DensityMatrix rho = pauli_eigenstate(parse_pauli_label(cfg.input), frame).density();
    const BellState bell = bell_state(t.alpha, t.alpha, t.cutoff, cfg.tol);
    for (const OutcomeRecord& r : enumerate_outcomes(rho, bell, cfg.enumeration)) {
        t.total_probability += r.probability;
        if (r.probability > cfg.probability_floor) {
            t.rows.push_back({r.n1, r.n2, r.probability});
        }
    }
    return t;
}

std::vector<SweepRecord> run_lossless_repeat(const ExperimentConfig& cfg) {
    std::vector<SweepPoint> pts;
    for (int n : cfg.steps) {
        for (double a : alpha_values(cfg)) {
            pts.push_back({a, n, 0.0});
        }
    }
    std::vector<SweepRecord> recs = evaluate_all(cfg, pts);
    if (cfg.optimize_alpha) {
        recs = argmin_alpha(std::move(recs));
    }
    sort_records(recs);
    return recs;
}

std::vector<SweepRecord> run_loss_sweeps(const ExperimentConfig& cfg) {
    std::vector<SweepPoint> pts;
    for (double total : cfg.gamma_total_db) {
        std::vector<int> steps;
        if (cfg.experiment == "loss_sweep_gamma") {
            if (cfg.include_direct) {
                steps.push_back(0);
            }
            for (double seg : cfg.gamma_segment_db) {
                steps.push_back(steps_for_segment_db(total, seg));
            }
        } else if (cfg.experiment == "loss_sweep_alpha") {
            steps = cfg.steps;
        } else {
            throw ConfigError("run_loss_sweeps: not a loss sweep: " + cfg.experiment);
        }
        std::sort(steps.begin(), steps.end());
        steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
        for (int n : steps) {
            for (double a : alpha_values(cfg)) {
                pts.push_back({a, n, total});
            }
        }
    }
    std::vector<SweepRecord> recs = evaluate_all(cfg, pts);
    if (cfg.optimize_alpha) {
        recs = argmin_alpha(std::move(recs));
    }
    sort_records(recs);
    return recs;
}

WignerComparison run_wigner_compare(const ExperimentConfig& cfg) {
    WignerComparison w;
    w.alpha = cfg.alphas.at(0);
    w.gamma_total_db = cfg.gamma_total_db.at(0);
    w.steps = cfg.steps.at(0);
    w.cutoff = cutoff_for(cfg, w.alpha);
    const GridSpec grid = GridSpec::symmetric(cfg.wigner_half_width, cfg.wigner_points);
    const SegmentPlan plan = plan_segments(LossSpec::from_db(w.gamma_total_db), w.steps);
    const LogicalFrame frame = make_frame(w.alpha, w.cutoff, cfg.tol);
    std::optional<TeleportChannel> channel;
    if (w.steps > 0) {
        channel.emplace(w.alpha, plan.segment.fraction, w.cutoff);
    }

    const int n_inputs = static_cast<int>(cfg.inputs.size());
    auto panels = parallel_map<std::vector<WignerPanel>>(n_inputs, cfg.threads, [&](int i) {
        const std::string& label = cfg.inputs[i];
        const LogicalCoeffState in = pauli_eigenstate(parse_pauli_label(label), frame);
        std::vector<WignerPanel> out;
        out.push_back({label, "input", wigner(in.density(), grid), 1.0});
        const DensityMatrix lossy = apply_loss(in.density(), plan.total.fraction, cfg.tol);
        out.push_back({label, "uncorrected", wigner(lossy, grid), 1.0});
        ChainOptions opts;
        opts.track_frames = true;
        opts.tol = cfg.tol;
        const ChainResult r = channel ? simulate_chain(in, *channel, w.steps, opts)
                                      : simulate_chain(in, plan, w.alpha, opts);
        const PostselectedState ps = postselect_identity_frame(r, cfg.tol);
        out.push_back({label, "corrected", wigner(ps.state, grid), ps.retained_probability});
        return out;
    });
    for (auto& p : panels) {
        for (auto& q : p) {
            w.panels.push_back(std::move(q));
        }
    }
    return w;
}

std::vector<CavityRow> run_cavity_scan(const ExperimentConfig& cfg) {
    const double alpha = cfg.alphas.at(0);
    const int d = cutoff_for(cfg, alpha);
    std::vector<CavityRow> rows;
    for (double delta : cfg.delta_over_kappa) {
        for (double g2 : cfg.g2_over_kappa_gamma) {
            CavityRow r;
            r.delta_over_kappa = delta;
            r.g2_over_kappa_gamma = g2;
            r.kappa_r_over_kappa = cfg.kappa_r_over_kappa;
            CavityParams p;
            p.kappa = 1.0;
            p.gamma_at = 1.0;
            p.kappa_r = cfg.kappa_r_over_kappa;
            p.delta = delta;
            p.g = std::sqrt(g2 * p.kappa * p.gamma_at);
            r.pair = reflection(p);
            rows.push_back(r);
        }
    }
    if (cfg.include_ideal_row) {
        CavityRow r;
        r.scanned = false;
        r.delta_over_kappa = 1.0;
        r.g2_over_kappa_gamma = std::numeric_limits<double>::infinity();
        r.kappa_r_over_kappa = 1.0;
        r.pair = {1.0, cplx(0.0, 1.0)};
        rows.push_back(r);
    }
    return parallel_map<CavityRow>(static_cast<int>(rows.size()), cfg.threads, [&](int i) {
        CavityRow r = rows[i];
        ReflectOptions opts;
        const ReflectionPair unit = r.pair.unit_magnitude();
        r.bell_fidelity = bell_fidelity(bell_from_cavity(alpha, unit, d, opts), alpha, d);
        return r;
    });
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records,
                     const Metadata& meta) {
    std::ofstream f = open_output(path);
    write_metadata(f, meta);
    f << "alpha,N,gamma_total_db,gamma_segment_db,p_x,p_y,p_z,p_avg,runtime_ms\n";
    for (const SweepRecord& r : records) {
        f << r.alpha << "," << r.N << "," << r.gamma_total_db << "," << r.gamma_segment_db << ","
          << r.perr.p_x << "," << r.perr.p_y << "," << r.perr.p_z << "," << r.perr.p_avg << ","
          << r.runtime_ms << "\n";
    }
}

void write_wigner_csv(const std::string& path, const WignerGrid& grid, const Metadata& meta) {
    std::ofstream f = open_output(path);
    write_metadata(f, meta);
    f << "x,p,W\n";
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
        for (std::size_t j = 0; j < grid.p.size(); ++j) {
            f << grid.x[i] << "," << grid.p[j] << "," << grid.values(i, j) << "\n";
        }
    }
}

std::vector<std::string> run_experiment(const ExperimentConfig& cfg) {
    namespace fs = std::filesystem;
    const std::string main_path = (fs::path(cfg.output_dir) / cfg.output).string();
    Metadata meta = common_metadata(cfg);
    std::vector<std::string> written = {main_path};
    const std::string& e = cfg.experiment;

    auto cutoff_note = [&](const std::vector<double>& alphas) {
        std::vector<double> ds;
        for (double a : alphas) {
            ds.push_back(cutoff_for(cfg, a));
        }
        const auto [lo, hi] = std::minmax_element(ds.begin(), ds.end());
        meta.emplace_back("cutoff_used", fmt(*lo) + ".." + fmt(*hi));
    };

    if (e == "outcome_hist") {
        const OutcomeTable t = run_outcome_hist(cfg);
        meta.emplace_back("alpha", fmt(t.alpha));
        meta.emplace_back("input", cfg.input);
        meta.emplace_back("cutoff_used", std::to_string(t.cutoff));
        meta.emplace_back("probability_floor", fmt(cfg.probability_floor));
        meta.emplace_back("enumerated_probability", fmt(t.total_probability));
        std::ofstream f = open_output(main_path);
        write_metadata(f, meta);
        f << "n1,n2,probability\n";
        for (const OutcomeRow& r : t.rows) {
            f << r.n1 << "," << r.n2 << "," << r.probability << "\n";
        }
        return written;
    }
    if (e == "lossless_repeat" || e == "loss_sweep_alpha" || e == "loss_sweep_gamma") {
        const std::vector<SweepRecord> recs =
            e == "lossless_repeat" ? run_lossless_repeat(cfg) : run_loss_sweeps(cfg);
        cutoff_note(alpha_values(cfg));
        if (cfg.optimize_alpha) {
            meta.emplace_back("alpha_optimization", "grid scan, argmin of p_avg");
            meta.emplace_back("alpha_grid", cfg.alpha_grid.describe());
        } else {
            meta.emplace_back("alpha", join(cfg.alphas));
        }
        if (e != "loss_sweep_gamma") {
            std::vector<double> ns(cfg.steps.begin(), cfg.steps.end());
            meta.emplace_back("N", join(ns));
        } else {
            meta.emplace_back("gamma_segment_db", join(cfg.gamma_segment_db));
            meta.emplace_back("include_direct", cfg.include_direct ? "true" : "false");
        }
        if (e != "lossless_repeat") {
            meta.emplace_back("gamma_total_db", join(cfg.gamma_total_db));
        }
        meta.emplace_back("runtime_ms", cfg.timing ? "measured" : "disabled (0)");
        write_sweep_csv(main_path, recs, meta);
        return written;
    }
    if (e == "wigner_compare") {
        const WignerComparison w = run_wigner_compare(cfg);
        meta.emplace_back("alpha", fmt(w.alpha));
        meta.emplace_back("gamma_total_db", fmt(w.gamma_total_db));
        meta.emplace_back("N", std::to_string(w.steps));
        meta.emplace_back("cutoff_used", std::to_string(w.cutoff));
        meta.emplace_back("grid", "x, p in [-" + fmt(cfg.wigner_half_width) + ", " +
                                      fmt(cfg.wigner_half_width) + "], " +
                                      std::to_string(cfg.wigner_points) + " points each");
        meta.emplace_back("convention", "beta = x + i p, W = (2/pi) Tr[rho D(beta) P D(beta)^dag]");
        meta.emplace_back("corrected", "identity-frame post-selection");
        std::ofstream f = open_output(main_path);
        write_metadata(f, meta);
        f << "input,stage,w_min,w_max,integral,retained_probability,file\n";
        for (const WignerPanel& p : w.panels) {
            const std::string name = "wigner_" + file_label(p.input) + "_" + p.stage + ".csv";
            const std::string path = (fs::path(cfg.output_dir) / name).string();
            Metadata m = meta;
            m.emplace_back("input", p.input);
            m.emplace_back("stage", p.stage);
            m.emplace_back("retained_probability", fmt(p.retained_probability));
            write_wigner_csv(path, p.grid, m);
            written.push_back(path);
            f << p.input << "," << p.stage << "," << p.grid.min() << "," << p.grid.max() << ","
              << p.grid.integral() << "," << p.retained_probability << "," << name << "\n";
        }
        return written;
    }
    // cavity_scan
    const std::vector<CavityRow> rows = run_cavity_scan(cfg);
    meta.emplace_back("alpha", fmt(cfg.alphas.at(0)));
    meta.emplace_back("cutoff_used", std::to_string(cutoff_for(cfg, cfg.alphas.at(0))));
    meta.emplace_back("units", "kappa = gamma_at = 1");
    meta.emplace_back("bell_fidelity", "unit-magnitude coefficients with the computed phases");
    std::ofstream f = open_output(main_path);
    write_metadata(f, meta);
    f << "row,delta_over_kappa,g2_over_kappa_gamma,kappa_r_over_kappa,r_up_re,r_up_im,r_down_re,"
         "r_down_im,abs_r_up,abs_r_down,phase,bell_fidelity\n";
    for (const CavityRow& r : rows) {
        f << (r.scanned ? "scan" : "ideal") << "," << r.delta_over_kappa << ","
          << r.g2_over_kappa_gamma << "," << r.kappa_r_over_kappa << ","
          << r.pair.r_up.real() + 0.0 << "," << r.pair.r_up.imag() + 0.0 << ","
          << r.pair.r_down.real() + 0.0 << "," << r.pair.r_down.imag() + 0.0 << "," << std::abs(r.pair.r_up) << ","
          << std::abs(r.pair.r_down) << "," << r.pair.relative_phase() << "," << r.bell_fidelity
          << "\n";
    }
    return written;
}

}  // namespace catlab
