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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lomac/csv.hpp"
#include "lomac/experiments.hpp"
#include "lomac/methods.hpp"
#include "lomac/simgen.hpp"

namespace {

using namespace lomac;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string out;
    bool header = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--out", opts.out, "output path")->required();
    cmd->add_flag("--header", opts.header, "input matrix CSV has a header line to skip");
}

struct SimOpts {
    SimConfig config;
    std::string noise = "mult";
};

void add_sim(CLI::App* cmd, SimOpts& opts) {
    cmd->add_option("--rows", opts.config.rows, "matrix rows");
    cmd->add_option("--cols", opts.config.cols, "matrix cols");
    cmd->add_option("--rank", opts.config.rank, "true rank");
    cmd->add_option("--observe-prob", opts.config.observe_prob,
                    "Bernoulli probability that an entry is observed");
    cmd->add_option("--noise-level", opts.config.noise_level, "noise level epsilon");
    cmd->add_option("--noise", opts.noise, "noise kind: mult|add")
        ->check(CLI::IsMember({"mult", "add"}));
}

NoiseKind parse_noise(const std::string& s) {
    return s == "add" ? NoiseKind::additive : NoiseKind::multiplicative;
}

struct MethodOpts {
    int rank = 0;
    int iterations = 32;
    std::string weighting = "mult";
    std::vector<double> distances;
};

// The sweep subcommands carry the simulation's --rank; their method-side
// target rank is --method-rank (0 = estimate from the spectrum).
void add_method_opts(CLI::App* cmd, MethodOpts& opts, bool sim_owns_rank) {
    cmd->add_option(sim_owns_rank ? "--method-rank" : "--rank", opts.rank,
                    "target rank (0 = estimate from the spectrum)");
    cmd->add_option("--iterations", opts.iterations, "max minors sampled per entry");
    cmd->add_option("--weighting", opts.weighting, "minor weighting: add|mult")
        ->check(CLI::IsMember({"add", "mult"}));
    cmd->add_option("--distances", opts.distances,
                    "per-column distances in meters (riegel)")
        ->delimiter(',');
}

MethodContext make_context(const MethodOpts& opts, std::uint64_t seed) {
    MethodContext ctx;
    ctx.rank = opts.rank;
    ctx.closure.target_rank = opts.rank > 0 ? opts.rank : 2;
    ctx.closure.iterations = opts.iterations;
    ctx.closure.weighting_mode =
        opts.weighting == "add" ? WeightingMode::additive : WeightingMode::multiplicative;
    ctx.refine.rank = opts.rank > 0 ? opts.rank : 2;
    ctx.seed = seed;
    if (!opts.distances.empty()) ctx.distances = opts.distances;
    return ctx;
}

int run(int argc, char** argv) {
    CLI::App app{"lomac - local algebraic low-rank matrix completion benchmark"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "draw a synthetic low-rank matrix");
    CommonOpts sim_common;
    SimOpts sim_opts;
    bool emit_truth = false;
    add_common(simulate, sim_common);
    add_sim(simulate, sim_opts);
    simulate->add_flag("--truth", emit_truth, "also write <out>.truth.csv");

    // complete
    auto* complete = app.add_subcommand("complete", "complete a matrix CSV with one method");
    CommonOpts cpl_common;
    MethodOpts cpl_method;
    std::string cpl_in, cpl_method_name = "faccro", cpl_init;
    add_common(complete, cpl_common);
    add_method_opts(complete, cpl_method, false);
    complete->add_option("--in", cpl_in, "input matrix CSV")->required();
    complete->add_option("--method", cpl_method_name, "completion method");
    complete->add_option("--init", cpl_init, "initializer for smcb/mos");

    // sweep-accuracy
    auto* sweep_acc = app.add_subcommand("sweep-accuracy", "accuracy sweep over one axis");
    CommonOpts acc_common;
    SimOpts acc_sim;
    MethodOpts acc_method;
    std::string acc_axis = "observe-prob";
    std::vector<double> acc_values;
    std::vector<std::string> acc_methods;
    int acc_trials = 20;
    bool acc_missing = false;
    add_common(sweep_acc, acc_common);
    add_sim(sweep_acc, acc_sim);
    add_method_opts(sweep_acc, acc_method, true);
    sweep_acc->add_option("--axis", acc_axis, "sweep axis")
        ->check(CLI::IsMember({"observe-prob", "noise-level", "size"}));
    sweep_acc->add_option("--values", acc_values, "axis values")->delimiter(',')->required();
    sweep_acc->add_option("--methods", acc_methods, "methods to compare")
        ->delimiter(',')
        ->required();
    sweep_acc->add_option("--trials", acc_trials, "trials per axis value");
    sweep_acc->add_flag("--missing-prob-axis", acc_missing,
                        "interpret observe-prob axis values as missing probabilities");

    // sweep-timing
    auto* sweep_time = app.add_subcommand("sweep-timing", "runtime sweep over matrix sizes");
    CommonOpts time_common;
    SimOpts time_sim;
    MethodOpts time_method;
    std::vector<Index> time_sizes;
    std::vector<std::string> time_methods;
    add_common(sweep_time, time_common);
    add_sim(sweep_time, time_sim);
    add_method_opts(sweep_time, time_method, true);
    sweep_time->add_option("--sizes", time_sizes, "square sizes")->delimiter(',')->required();
    sweep_time->add_option("--methods", time_methods, "methods to time")
        ->delimiter(',')
        ->required();

    // eval-real
    auto* eval_real = app.add_subcommand("eval-real", "random-deletion evaluation on a CSV");
    CommonOpts real_common;
    MethodOpts real_method;
    std::string real_in;
    Index real_deletions = 100;
    std::vector<std::string> real_methods;
    add_common(eval_real, real_common);
    add_method_opts(eval_real, real_method, false);
    eval_real->add_option("--in", real_in, "input matrix CSV")->required();
    eval_real->add_option("--deletions", real_deletions, "entries to delete");
    eval_real->add_option("--methods", real_methods, "methods to compare")
        ->delimiter(',')
        ->required();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "spectral gap / alignment report");
    CommonOpts spec_common;
    SimOpts spec_sim;
    MethodOpts spec_method;
    std::vector<std::string> spec_inits = {"truth", "faccro", "meanfill"};
    int spec_trials = 20;
    int spec_gaps = 8;
    add_common(spectrum, spec_common);
    add_sim(spectrum, spec_sim);
    add_method_opts(spectrum, spec_method, true);
    spectrum->add_option("--inits", spec_inits, "initializers (or 'truth')")->delimiter(',');
    spectrum->add_option("--trials", spec_trials, "number of draws");
    spectrum->add_option("--gap-count", spec_gaps, "number of gaps to report");

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) {
        sim_opts.config.seed = sim_common.seed;
        sim_opts.config.noise_kind = parse_noise(sim_opts.noise);
        const SimDraw s = draw(sim_opts.config);
        write_matrix_csv_file(sim_common.out, s.observed);
        write_mask_csv_file(sim_common.out + ".mask.csv", s.observed.mask());
        if (emit_truth)
            write_dense_csv_file(sim_common.out + ".truth.csv", s.truth);
    } else if (complete->parsed()) {
        const auto A = read_matrix_csv_file(cpl_in, cpl_common.header);
        const std::string spec =
            cpl_init.empty() ? cpl_method_name : cpl_method_name + "(" + cpl_init + ")";
        if (!is_known_method(spec))
            throw std::invalid_argument("unknown completion method: " + spec);
        const auto completed = run_method(spec, A, make_context(cpl_method, cpl_common.seed));
        write_dense_csv_file(cpl_common.out, completed);
    } else if (sweep_acc->parsed()) {
        SweepSpec spec;
        spec.axis = acc_axis == "observe-prob" ? SweepAxis::observe_prob
                    : acc_axis == "noise-level" ? SweepAxis::noise_level
                                                : SweepAxis::size;
        spec.values = acc_values;
        spec.trials = acc_trials;
        spec.base_config = acc_sim.config;
        spec.base_config.noise_kind = parse_noise(acc_sim.noise);
        spec.methods = acc_methods;
        spec.seed = acc_common.seed;
        spec.values_are_missing_prob = acc_missing;
        spec.context = make_context(acc_method, acc_common.seed);
        auto out = open_out(acc_common.out);
        write_records_csv(out, run_accuracy_sweep(spec));
    } else if (sweep_time->parsed()) {
        SimConfig base = time_sim.config;
        base.noise_kind = parse_noise(time_sim.noise);
        auto out = open_out(time_common.out);
        write_records_csv(out, run_timing_sweep(time_sizes, base, time_methods,
                                                time_common.seed,
                                                make_context(time_method, time_common.seed)));
    } else if (eval_real->parsed()) {
        const auto A = read_matrix_csv_file(real_in, real_common.header);
        auto out = open_out(real_common.out);
        write_records_csv(out, run_realdata_eval(A, real_deletions, real_methods,
                                                 real_common.seed,
                                                 make_context(real_method, real_common.seed)));
    } else if (spectrum->parsed()) {
        SimConfig cfg = spec_sim.config;
        cfg.noise_kind = parse_noise(spec_sim.noise);
        cfg.seed = spec_common.seed;
        auto out = open_out(spec_common.out);
        write_spectrum_csv(out, run_spectrum_report(cfg, spec_inits, spec_trials, spec_gaps,
                                                    make_context(spec_method, spec_common.seed)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
