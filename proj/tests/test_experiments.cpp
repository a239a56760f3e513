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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lomac/experiments.hpp"
#include "test_util.hpp"

using namespace lomac;

TEST_CASE("method registry knows its names, including compositions") {
    for (const auto& name : registered_method_names()) {
        if (name == "smcb" || name == "mos") {
            // composition methods need an argument
            CHECK(!is_known_method(name));
            CHECK(is_known_method(name + "(meanfill)"));
        } else {
            CHECK(is_known_method(name));
        }
    }
    CHECK(is_known_method("smcb(faccro)"));
    CHECK(is_known_method("mos(smcb(faccro))"));
    CHECK(is_known_method("mos(meanfill)"));
    CHECK(!is_known_method("gradient-descent"));
    CHECK(!is_known_method("smcb(unknown)"));
    CHECK(!is_known_method("smcb("));
    CHECK(!is_known_method(""));
}

TEST_CASE("run_method rejects unknown specs") {
    auto a = MaskedMatrix::fully_observed(test::positive_low_rank(5, 5, 1, 1));
    CHECK_THROWS_AS(run_method("nope", a, MethodContext{}), std::invalid_argument);
}

TEST_CASE("riegel through the registry requires distances") {
    auto a = MaskedMatrix::fully_observed(test::positive_low_rank(3, 3, 1, 2));
    CHECK_THROWS_AS(run_method("riegel", a, MethodContext{}), std::invalid_argument);
    MethodContext ctx;
    ctx.distances = std::vector<double>{1000.0, 2000.0, 3000.0};
    CHECK_NOTHROW(run_method("riegel", a, ctx));
}

TEST_CASE("record CSV round trip preserves optionals") {
    std::vector<ExperimentRecord> records;
    ExperimentRecord r1;
    r1.method = "faccro";
    r1.axis = "observe_prob";
    r1.axis_value = 0.5;
    r1.trial = 0;
    r1.mse = 0.125;
    r1.runtime_seconds = 0.25;
    r1.seed = 77;
    records.push_back(r1);
    ExperimentRecord agg;
    agg.method = "faccro";
    agg.axis = "observe_prob";
    agg.axis_value = 0.5;
    agg.trial = -1;
    agg.mse = 0.125;
    agg.ci_low = 0.1;
    agg.ci_high = 0.15;
    agg.seed = 77;
    records.push_back(agg);

    std::ostringstream out;
    write_records_csv(out, records);
    CHECK(out.str().rfind("method,axis,axis_value,trial,mse,ci_low,ci_high,"
                          "runtime_seconds,seed\n", 0) == 0);

    std::istringstream in(out.str());
    const auto back = read_records_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0].method == "faccro");
    CHECK(back[0].mse == 0.125);
    CHECK(!back[0].ci_low.has_value());
    CHECK(back[1].trial == -1);
    CHECK(back[1].ci_low == 0.1);
    CHECK(back[1].ci_high == 0.15);
}

TEST_CASE("accuracy sweep is deterministic and covers the grid") {
    SweepSpec spec;
    spec.axis = SweepAxis::observe_prob;
    spec.values = {0.6, 0.8};
    spec.trials = 3;
    spec.base_config.rows = 15;
    spec.base_config.cols = 15;
    spec.base_config.rank = 1;
    spec.base_config.noise_level = 0.05;
    spec.methods = {"faccro", "meanfill"};
    spec.seed = 5;

    const auto a = run_accuracy_sweep(spec);
    const auto b = run_accuracy_sweep(spec);
    REQUIRE(a.size() == b.size());
    // 2 values x 2 methods x (3 trials + 1 aggregate)
    CHECK(a.size() == 16);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].method == b[k].method);
        CHECK(a[k].trial == b[k].trial);
        CHECK(a[k].mse == b[k].mse);
        CHECK(a[k].seed == b[k].seed);
    }
    int aggregates = 0;
    for (const auto& r : a)
        if (r.trial == -1) {
            ++aggregates;
            REQUIRE(r.ci_low.has_value());
            REQUIRE(r.ci_high.has_value());
            CHECK(*r.ci_low <= *r.mse);
            CHECK(*r.mse <= *r.ci_high);
        }
    CHECK(aggregates == 4);
}

TEST_CASE("missing-probability axis convention flips observe_prob") {
    SweepSpec spec;
    spec.axis = SweepAxis::observe_prob;
    spec.values = {0.7};
    spec.trials = 2;
    spec.base_config.rows = 12;
    spec.base_config.cols = 12;
    spec.base_config.rank = 1;
    spec.methods = {"meanfill"};
    spec.seed = 9;

    spec.values_are_missing_prob = true;
    const auto flipped = run_accuracy_sweep(spec);
    spec.values_are_missing_prob = false;
    spec.values = {0.3};
    const auto direct = run_accuracy_sweep(spec);
    REQUIRE(flipped.size() == direct.size());
    for (std::size_t k = 0; k < flipped.size(); ++k)
        CHECK(flipped[k].mse == direct[k].mse);
}

TEST_CASE("noiseless rank-1 sweep gives near-zero faccro error") {
    SweepSpec spec;
    spec.axis = SweepAxis::noise_level;
    spec.values = {0.0};
    spec.trials = 4;
    spec.base_config.rows = 20;
    spec.base_config.cols = 20;
    spec.base_config.rank = 1;
    spec.base_config.observe_prob = 0.8;
    spec.methods = {"faccro"};
    spec.seed = 13;
    for (const auto& r : run_accuracy_sweep(spec))
        if (r.trial >= 0) CHECK(*r.mse < 1e-12);
}

TEST_CASE("sweep validation") {
    SweepSpec spec;
    spec.values = {};
    spec.methods = {"faccro"};
    CHECK_THROWS_AS(run_accuracy_sweep(spec), std::invalid_argument);
    spec.values = {0.5};
    spec.methods = {"bogus"};
    CHECK_THROWS_AS(run_accuracy_sweep(spec), std::invalid_argument);
    spec.methods = {"faccro"};
    spec.trials = 0;
    CHECK_THROWS_AS(run_accuracy_sweep(spec), std::invalid_argument);
}

TEST_CASE("timing sweep reports positive runtimes per size and method") {
    SimConfig base;
    base.rank = 1;
    base.observe_prob = 0.7;
    const auto rows = run_timing_sweep({10, 14}, base, {"faccro", "meanfill"}, 3,
                                       MethodContext{});
    CHECK(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.axis == "size");
        CHECK(r.runtime_seconds > 0.0);
        CHECK(!r.mse.has_value());
    }
}

TEST_CASE("real-data eval recovers a rank-1 matrix almost exactly") {
    const Eigen::MatrixXd truth = test::positive_low_rank(20, 20, 1, 44);
    auto a = MaskedMatrix::fully_observed(truth);
    const auto rows = run_realdata_eval(a, 40, {"faccro"}, 17, MethodContext{});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].axis == "deletions");
    CHECK(rows[0].axis_value == 40.0);
    REQUIRE(rows[0].mse.has_value());
    CHECK(*rows[0].mse < 1e-12);
    REQUIRE(rows[0].ci_low.has_value());
    CHECK(*rows[0].ci_low <= *rows[0].mse);
}

TEST_CASE("real-data eval is deterministic in its deletions") {
    const Eigen::MatrixXd truth = test::positive_low_rank(15, 15, 2, 3);
    auto a = MaskedMatrix::fully_observed(truth);
    const auto r1 = run_realdata_eval(a, 30, {"meanfill"}, 5, MethodContext{});
    const auto r2 = run_realdata_eval(a, 30, {"meanfill"}, 5, MethodContext{});
    CHECK(r1[0].mse == r2[0].mse);
}

TEST_CASE("spectrum report shape and the truth pseudo-init") {
    SimConfig cfg;
    cfg.rows = 20;
    cfg.cols = 20;
    cfg.rank = 2;
    cfg.observe_prob = 0.6;
    cfg.seed = 8;
    const auto rows = run_spectrum_report(cfg, {"truth", "faccro", "meanfill"}, 2, 3,
                                          MethodContext{});
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.gaps.size() == 3);
        CHECK(r.align_2 >= 0.0);
        CHECK(r.align_2 <= 1.0 + 1e-12);
    }
    for (const auto& r : rows)
        if (r.init == "truth") CHECK(r.align_2 == doctest::Approx(1.0));

    std::ostringstream out;
    write_spectrum_csv(out, rows);
    CHECK(out.str().rfind("init,trial,gap_1,gap_2,gap_3,align_2\n", 0) == 0);
}
