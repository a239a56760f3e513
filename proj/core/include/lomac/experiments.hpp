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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lomac/methods.hpp"
#include "lomac/simgen.hpp"

namespace lomac {

/// One row of benchmark output. trial == -1 marks an aggregate row
/// (mean MSE over trials with a bootstrap CI).
struct ExperimentRecord {
    std::string method;
    std::string axis;
    double axis_value = 0.0;
    int trial = 0;
    std::optional<double> mse;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    double runtime_seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Fixed schema: method,axis,axis_value,trial,mse,ci_low,ci_high,
/// runtime_seconds,seed. Header always emitted; unpopulated optionals are
/// empty fields.
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_records_csv(std::istream& in);

enum class SweepAxis { observe_prob, noise_level, size };

struct SweepSpec {
    SweepAxis axis = SweepAxis::observe_prob;
    std::vector<double> values;
    int trials = 20;
    SimConfig base_config;
    std::vector<std::string> methods;
    std::uint64_t seed = 0;
    /// Interpret observe_prob axis values as the probability an entry is
    /// *missing* (axis value v means observe_prob = 1 - v).
    bool values_are_missing_prob = false;
    MethodContext context;

    void validate() const;
};

/// Accuracy protocol: for each axis value x trial, draw a matrix, run each
/// method, score masked MSE against the truth on the unobserved positions.
/// Per-trial rows plus one aggregate row (trial == -1, bootstrap CI over
/// trial MSEs) per (axis value, method). Deterministic given spec.seed.
std::vector<ExperimentRecord> run_accuracy_sweep(const SweepSpec& spec);

/// Runtime protocol: square matrices of the given sizes; per method one
/// untimed warm-up then the median of 3 timed runs.
std::vector<ExperimentRecord> run_timing_sweep(const std::vector<Index>& sizes,
                                               const SimConfig& base,
                                               const std::vector<std::string>& methods,
                                               std::uint64_t seed,
                                               const MethodContext& context);

/// Real-data protocol: delete `deletions` observed entries, run each
/// method, score column-normalized MSE on the deleted positions (column
/// means from the entries that remain observed), bootstrap CI with 1000
/// iterations over the per-entry squared errors.
std::vector<ExperimentRecord> run_realdata_eval(const MaskedMatrix& matrix, Index deletions,
                                                const std::vector<std::string>& methods,
                                                std::uint64_t seed,
                                                const MethodContext& context);

/// Spectrum diagnostic row: leading spectral gaps and the alignment of the
/// 2nd right singular vector with the truth's, for one init on one trial.
struct SpectrumRow {
    std::string init;
    int trial = 0;
    std::vector<double> gaps;
    double align_2 = 0.0;
};

/// Draws `trials` matrices from config and completes each with every init;
/// a synthetic init named "truth" reports the truth's own spectrum.
std::vector<SpectrumRow> run_spectrum_report(const SimConfig& config,
                                             const std::vector<std::string>& inits,
                                             int trials, int gap_count,
                                             const MethodContext& context);

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows);

}  // namespace lomac
