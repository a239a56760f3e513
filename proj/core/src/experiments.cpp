/*
 * Copyright (c) 2026, the lomac authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lomac/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lomac/csv.hpp"
#include "lomac/rng.hpp"
#include "lomac/stats.hpp"

namespace lomac {

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == sep) {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

const char* kRecordHeader =
    "method,axis,axis_value,trial,mse,ci_low,ci_high,runtime_seconds,seed";

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.method << ',' << r.axis << ',' << format_double(r.axis_value) << ','
            << r.trial << ',' << opt_field(r.mse) << ',' << opt_field(r.ci_low) << ','
            << opt_field(r.ci_high) << ',' << format_double(r.runtime_seconds) << ','
            << r.seed << '\n';
    }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || split(line, ',').size() != 9)
        throw std::invalid_argument("records CSV: missing or malformed header");
    std::vector<ExperimentRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 9)
            throw std::invalid_argument("records CSV: expected 9 fields per row");
        ExperimentRecord r;
        r.method = f[0];
        r.axis = f[1];
        r.axis_value = std::stod(f[2]);
        r.trial = std::stoi(f[3]);
        auto opt = [](const std::string& s) -> std::optional<double> {
            if (s.empty()) return std::nullopt;
            return std::stod(s);
        };
        r.mse = opt(f[4]);
        r.ci_low = opt(f[5]);
        r.ci_high = opt(f[6]);
        r.runtime_seconds = std::stod(f[7]);
        r.seed = std::stoull(f[8]);
        records.push_back(std::move(r));
    }
    return records;
}

void SweepSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("SweepSpec: trials must be >= 1");
    if (values.empty()) throw std::invalid_argument("SweepSpec: no axis values");
    if (methods.empty()) throw std::invalid_argument("SweepSpec: no methods");
    for (const auto& m : methods)
        if (!is_known_method(m))
            throw std::invalid_argument("SweepSpec: unknown method '" + m + "'");
}

namespace {

SimConfig apply_axis(const SimConfig& base, SweepAxis axis, double value,
                     bool values_are_missing_prob) {
    SimConfig cfg = base;
    switch (axis) {
        case SweepAxis::observe_prob:
            cfg.observe_prob = values_are_missing_prob ? 1.0 - value : value;
            break;
        case SweepAxis::noise_level:
            cfg.noise_level = value;
            break;
        case SweepAxis::size:
            cfg.rows = static_cast<Index>(value);
            cfg.cols = static_cast<Index>(value);
            break;
    }
    return cfg;
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::observe_prob: return "observe_prob";
        case SweepAxis::noise_level: return "noise_level";
        case SweepAxis::size: return "size";
    }
    return "?";
}

}  // namespace

std::vector<ExperimentRecord> run_accuracy_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<ExperimentRecord> records;

    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        const double value = spec.values[vi];
        // per-method trial MSEs for the aggregate rows
        std::vector<std::vector<double>> trial_mses(spec.methods.size());

        for (int trial = 0; trial < spec.trials; ++trial) {
            SimConfig cfg = apply_axis(spec.base_config, spec.axis, value,
                                       spec.values_are_missing_prob);
            cfg.seed = derive_trial_seed(spec.seed, static_cast<long>(vi), trial);
            const SimDraw sim = draw(cfg);
            const Mask eval = !sim.observed.mask();
            const auto truth = MaskedMatrix::fully_observed(sim.truth);

            for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
                MethodContext ctx = spec.context;
                ctx.seed = cfg.seed;
                if (ctx.rank == 0 && spec.methods[mi] == "vmclosure")
                    ctx.rank = cfg.rank;
                const double t0 = now_seconds();
                const Eigen::MatrixXd completed = run_method(spec.methods[mi], sim.observed, ctx);
                const double elapsed = now_seconds() - t0;
                const double mse =
                    eval.count() > 0 ? masked_mse(truth, completed, eval, false) : 0.0;
                trial_mses[mi].push_back(mse);

                ExperimentRecord r;
                r.method = spec.methods[mi];
                r.axis = axis_name(spec.axis);
                r.axis_value = value;
                r.trial = trial;
                r.mse = mse;
                r.runtime_seconds = elapsed;
                r.seed = cfg.seed;
                records.push_back(std::move(r));
            }
        }

        for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
            double mean = 0.0;
            for (double m : trial_mses[mi]) mean += m;
            mean /= static_cast<double>(trial_mses[mi].size());
            const auto [lo, hi] =
                bootstrap_ci(trial_mses[mi], 1000, derive_seed(spec.seed, static_cast<long>(vi),
                                                               static_cast<long>(mi)));
            ExperimentRecord r;
            r.method = spec.methods[mi];
            r.axis = axis_name(spec.axis);
            r.axis_value = value;
            r.trial = -1;
            r.mse = mean;
            r.ci_low = lo;
            r.ci_high = hi;
            r.seed = spec.seed;
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_timing_sweep(const std::vector<Index>& sizes,
                                               const SimConfig& base,
                                               const std::vector<std::string>& methods,
                                               std::uint64_t seed,
                                               const MethodContext& context) {
    for (const auto& m : methods)
        if (!is_known_method(m))
            throw std::invalid_argument("run_timing_sweep: unknown method '" + m + "'");

    std::vector<ExperimentRecord> records;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        SimConfig cfg = base;
        cfg.rows = sizes[si];
        cfg.cols = sizes[si];
        cfg.seed = derive_trial_seed(seed, static_cast<long>(si), 0);
        const SimDraw sim = draw(cfg);

        for (const auto& method : methods) {
            MethodContext ctx = context;
            ctx.seed = cfg.seed;
            if (ctx.rank == 0 && method == "vmclosure") ctx.rank = cfg.rank;
            (void)run_method(method, sim.observed, ctx);  // warm-up
            std::vector<double> times;
            for (int rep = 0; rep < 3; ++rep) {
                const double t0 = now_seconds();
                (void)run_method(method, sim.observed, ctx);
                times.push_back(now_seconds() - t0);
            }
            std::sort(times.begin(), times.end());
            ExperimentRecord r;
            r.method = method;
            r.axis = "size";
            r.axis_value = static_cast<double>(sizes[si]);
            r.trial = -1;
            r.runtime_seconds = times[1];  // median of 3
            r.seed = cfg.seed;
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_realdata_eval(const MaskedMatrix& matrix, Index deletions,
                                                const std::vector<std::string>& methods,
                                                std::uint64_t seed,
                                                const MethodContext& context) {
    for (const auto& m : methods)
        if (!is_known_method(m))
            throw std::invalid_argument("run_realdata_eval: unknown method '" + m + "'");

    auto [reduced, deleted] = delete_entries(matrix, deletions, seed);

    std::vector<ExperimentRecord> records;
    for (const auto& method : methods) {
        MethodContext ctx = context;
        ctx.seed = seed;
        const double t0 = now_seconds();
        const Eigen::MatrixXd completed = run_method(method, reduced, ctx);
        const double elapsed = now_seconds() - t0;
        // Column means come from the entries that remain observed.
        const auto errors =
            masked_squared_errors(matrix, completed, deleted, true, reduced.mask());
        double mean = 0.0;
        for (double e : errors) mean += e;
        mean /= static_cast<double>(errors.size());
        const auto [lo, hi] = bootstrap_ci(errors, 1000, derive_seed(seed, 0, 0));

        ExperimentRecord r;
        r.method = method;
        r.axis = "deletions";
        r.axis_value = static_cast<double>(deletions);
        r.trial = -1;
        r.mse = mean;
        r.ci_low = lo;
        r.ci_high = hi;
        r.runtime_seconds = elapsed;
        r.seed = seed;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<SpectrumRow> run_spectrum_report(const SimConfig& config,
                                             const std::vector<std::string>& inits,
                                             int trials, int gap_count,
                                             const MethodContext& context) {
    for (const auto& m : inits)
        if (m != "truth" && !is_known_method(m))
            throw std::invalid_argument("run_spectrum_report: unknown init '" + m + "'");
    if (trials < 1) throw std::invalid_argument("run_spectrum_report: trials must be >= 1");

    std::vector<SpectrumRow> rows;
    for (int trial = 0; trial < trials; ++trial) {
        SimConfig cfg = config;
        cfg.seed = derive_trial_seed(config.seed, 0, trial);
        const SimDraw sim = draw(cfg);
        for (const auto& init : inits) {
            Eigen::MatrixXd grid;
            if (init == "truth") {
                grid = sim.truth;
            } else {
                MethodContext ctx = context;
                ctx.seed = cfg.seed;
                grid = run_method(init, sim.observed, ctx);
            }
            SpectrumRow row;
            row.init = init;
            row.trial = trial;
            row.gaps = spectral_gaps(grid, gap_count);
            row.align_2 = singular_vector_alignment(grid, sim.truth, 2);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    if (rows.empty()) return;
    out << "init,trial";
    for (std::size_t g = 0; g < rows.front().gaps.size(); ++g) out << ",gap_" << (g + 1);
    out << ",align_2\n";
    for (const auto& row : rows) {
        out << row.init << ',' << row.trial;
        for (double g : row.gaps) out << ',' << format_double(g);
        out << ',' << format_double(row.align_2) << '\n';
    }
}

}  // namespace lomac
