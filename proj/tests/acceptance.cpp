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

// End-to-end acceptance suite. Each numbered criterion prints one
// pass/fail line; the process exits nonzero when any fail.

#include <Eigen/LU>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lomac/baselines.hpp"
#include "lomac/errors.hpp"
#include "lomac/methods.hpp"
#include "lomac/rank1.hpp"
#include "lomac/rankr.hpp"
#include "lomac/simgen.hpp"
#include "lomac/spectral.hpp"
#include "lomac/stats.hpp"
#include "test_util.hpp"

namespace {

using namespace lomac;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << '\n';
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Noiseless rank-1 exactness under partial observation.
void criterion_1() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimConfig cfg;
        cfg.rows = 30;
        cfg.cols = 30;
        cfg.rank = 1;
        cfg.observe_prob = 0.7;
        cfg.noise_level = 0.0;
        cfg.seed = seed;
        const SimDraw s = draw(cfg);
        const auto result = faccro_all(s.observed);
        for (Index i = 0; i < 30; ++i)
            for (Index j = 0; j < 30; ++j) {
                if (result.fallback(i, j)) continue;
                worst = std::max(worst, std::abs(result.values(i, j) - s.truth(i, j)) /
                                            s.truth(i, j));
            }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "max rel err " << worst << ", " << elapsed << " s";
    report(1, "noiseless rank-1 completion exact over 20 seeds",
           worst < 1e-8 && elapsed < 5.0, d.str());
}

// 2. Noiseless rank-2 exactness via minor closure.
void criterion_2() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimConfig cfg;
        cfg.rows = 20;
        cfg.cols = 20;
        cfg.rank = 2;
        cfg.observe_prob = 0.9;
        cfg.noise_level = 0.0;
        cfg.seed = seed;
        const SimDraw s = draw(cfg);
        ClosureConfig ccfg;
        ccfg.target_rank = 2;
        ccfg.seed = seed;
        const auto result = vmclosure_all(s.observed, ccfg);
        for (Index i = 0; i < 20; ++i)
            for (Index j = 0; j < 20; ++j) {
                if (s.observed.observed(i, j) || result.fallback(i, j)) continue;
                worst = std::max(worst, std::abs(result.values(i, j) - s.truth(i, j)) /
                                            s.truth(i, j));
            }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "max rel err " << worst << ", " << elapsed << " s";
    report(2, "noiseless rank-2 minor closure exact over 20 seeds",
           worst < 1e-6 && elapsed < 30.0, d.str());
}

// Brute-force root of det(minor with hole -> x) by grid scan + bisection.
double scan_root(const Eigen::MatrixXd& with_hole_zero, double hi) {
    auto det_at = [&](double x) {
        Eigen::MatrixXd b = with_hole_zero;
        b(b.rows() - 1, b.cols() - 1) = x;
        return b.determinant();
    };
    const int grid = 4096;
    double lo = 0.0;
    double flo = det_at(lo);
    double root = std::numeric_limits<double>::quiet_NaN();
    for (int g = 1; g <= grid; ++g) {
        const double x = hi * g / grid;
        const double fx = det_at(x);
        if (flo == 0.0) return lo;
        if ((flo < 0.0) != (fx < 0.0)) {
            double a = lo, b = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if ((det_at(mid) < 0.0) == (flo < 0.0))
                    a = mid;
                else
                    b = mid;
            }
            root = 0.5 * (a + b);
            break;
        }
        lo = x;
        flo = fx;
    }
    return root;
}

// 3. Minor-solver agreement with the truth and with a brute-force scan.
void criterion_3() {
    int solved = 0;
    double worst_truth = 0.0, worst_scan = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
        const int r = 1 + rep % 3;
        const Eigen::MatrixXd truth =
            test::positive_low_rank(r + 1, r + 1, r, 1000 + static_cast<std::uint64_t>(rep));
        const double held = truth(r, r);
        Eigen::MatrixXd b = truth;
        b(r, r) = 0.0;
        try {
            const auto sol = solve_minor(b);
            ++solved;
            worst_truth = std::max(worst_truth, std::abs(sol.solution - held) / held);
            const double scanned = scan_root(b, 4.0 * held + 1.0);
            if (std::isnan(scanned)) {
                worst_scan = 1.0;
                continue;
            }
            worst_scan = std::max(
                worst_scan, std::abs(sol.solution - scanned) / std::max(held, 1.0));
        } catch (const DegenerateMinorError&) {
        }
    }
    std::ostringstream d;
    d << solved << "/500 non-degenerate, rel err vs truth " << worst_truth
      << ", vs scan " << worst_scan;
    report(3, "minor solver matches held-out truth and brute-force root scan",
           solved > 450 && worst_truth < 1e-8 && worst_scan < 1e-6, d.str());
}

// 4. Weighting formula spot values.
void criterion_4() {
    const bool ok =
        minor_weight(-12.0, -10.0, WeightingMode::additive) == 3.5 &&
        std::abs(minor_weight(-12.0, -10.0, WeightingMode::multiplicative) - 7.0 / 12.0) <
            1e-15;
    report(4, "variance-proxy spot values (3.5 additive, 7/12 multiplicative)", ok);
}

// 5. The first-order variance proxy ranks minors like their empirical noise
// sensitivity.
void criterion_5() {
    const double eps = 0.01;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> proxies, stds;
    for (int m = 0; proxies.size() < 200 && m < 400; ++m) {
        const Eigen::MatrixXd truth =
            test::positive_low_rank(3, 3, 2, 5000 + static_cast<std::uint64_t>(m));
        Eigen::MatrixXd clean = truth;
        clean(2, 2) = 0.0;
        double proxy;
        try {
            const auto sol = solve_minor(clean);
            proxy = minor_weight(sol.a0, sol.a1, WeightingMode::additive);
        } catch (const DegenerateMinorError&) {
            continue;
        }
        std::vector<double> solutions;
        for (int redraw = 0; redraw < 50; ++redraw) {
            Eigen::MatrixXd noisy = clean;
            for (Index i = 0; i < 3; ++i)
                for (Index j = 0; j < 3; ++j)
                    if (i != 2 || j != 2) noisy(i, j) *= std::exp(eps * normal(rng));
            try {
                solutions.push_back(solve_minor(noisy).solution);
            } catch (const DegenerateMinorError&) {
            }
        }
        if (solutions.size() < 40) continue;
        double mean = 0.0;
        for (double x : solutions) mean += x;
        mean /= static_cast<double>(solutions.size());
        double var = 0.0;
        for (double x : solutions) var += (x - mean) * (x - mean);
        var /= static_cast<double>(solutions.size());
        proxies.push_back(proxy);
        stds.push_back(std::sqrt(var));
    }
    const double rho = test::spearman(proxies, stds);
    std::ostringstream d;
    d << "spearman " << rho << " over " << proxies.size() << " minors";
    report(5, "variance proxy rank-correlates with empirical solution noise",
           proxies.size() >= 200 && rho > 0.5, d.str());
}

// 6. Algebraic initialization sharpens the spectrum relative to mean fill.
void criterion_6() {
    int gap_wins = 0, align_wins = 0;
    const int seeds = 20;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        SimConfig cfg;
        cfg.rows = 50;
        cfg.cols = 50;
        cfg.rank = 2;
        cfg.observe_prob = 0.5;
        cfg.noise_level = 0.0;
        cfg.seed = seed;
        const SimDraw s = draw(cfg);
        MethodContext ctx;
        ctx.seed = seed;
        const Eigen::MatrixXd alg = run_method("faccro", s.observed, ctx);
        const Eigen::MatrixXd mean = run_method("meanfill", s.observed, ctx);
        if (spectral_gaps(alg, 1)[0] > spectral_gaps(mean, 1)[0]) ++gap_wins;
        if (singular_vector_alignment(alg, s.truth, 2) >
            singular_vector_alignment(mean, s.truth, 2))
            ++align_wins;
    }
    std::ostringstream d;
    d << "gap wins " << gap_wins << "/20, alignment wins " << align_wins << "/20";
    report(6, "algebraic init beats mean fill on spectral gap and alignment",
           gap_wins >= 18 && align_wins >= 18, d.str());
}

// 7. Refinement from the algebraic-spectral init at least matches the
// mean-fill init.
void criterion_7() {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimConfig cfg;
        cfg.rows = 50;
        cfg.cols = 50;
        cfg.rank = 2;
        cfg.observe_prob = 0.6;
        cfg.noise_level = 0.1;
        cfg.noise_kind = NoiseKind::multiplicative;
        cfg.seed = seed;
        const SimDraw s = draw(cfg);
        MethodContext ctx;
        ctx.rank = 2;
        ctx.seed = seed;
        const Mask eval = !s.observed.mask();
        const auto truth = MaskedMatrix::fully_observed(s.truth);
        const double mse_alg = masked_mse(
            truth, run_method("mos(smcb(faccro))", s.observed, ctx), eval, false);
        const double mse_mean =
            masked_mse(truth, run_method("mos(meanfill)", s.observed, ctx), eval, false);
        // both inits often converge to the same minimum; a 0.1% relative
        // band keeps such ties from deciding the comparison either way
        if (mse_alg <= mse_mean * 1.001) ++wins;
    }
    std::ostringstream d;
    d << wins << "/20 paired seeds";
    report(7, "refined algebraic init no worse than refined mean fill", wins >= 16,
           d.str());
}

// 8. The spectral bootstrap pipeline runs faster than cross-validated
// nuclear-norm completion.
void criterion_8() {
    SimConfig cfg;
    cfg.rows = 150;
    cfg.cols = 150;
    cfg.rank = 2;
    cfg.observe_prob = 0.5;
    cfg.noise_level = 0.0;
    cfg.seed = 1;
    const SimDraw s = draw(cfg);
    MethodContext ctx;
    ctx.rank = 2;

    auto median_time = [&](auto&& fn) {
        fn();  // warm-up
        std::vector<double> times;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = Clock::now();
            fn();
            times.push_back(seconds_since(t0));
        }
        return test::median(times);
    };

    const double t_smcb =
        median_time([&] { run_method("smcb(faccro)", s.observed, ctx); });
    const double t_svt = median_time([&] { svt_complete(s.observed, SvtConfig{}, 1); });
    const double t_opt =
        median_time([&] { run_method("optspace-like", s.observed, ctx); });
    std::ostringstream d;
    d << "smcb(faccro) " << t_smcb << " s, svt " << t_svt << " s, optspace-like "
      << t_opt << " s";
    report(8, "spectral bootstrap faster than cross-validated nuclear norm",
           t_smcb < t_svt, d.str());
}

// 9. Refinement objective is monotone.
void criterion_9() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimConfig cfg;
        cfg.rows = 25;
        cfg.cols = 20;
        cfg.rank = 3;
        cfg.observe_prob = 0.6;
        cfg.noise_level = 0.15;
        cfg.seed = seed;
        const SimDraw s = draw(cfg);
        RefineConfig rcfg;
        rcfg.rank = 3;
        rcfg.max_iters = 50;
        const auto out = refine(s.observed, faccro_all(s.observed).values, rcfg);
        for (std::size_t k = 1; k < out.objective.size(); ++k)
            if (out.objective[k] > out.objective[k - 1] * (1.0 + 1e-12)) ok = false;
    }
    report(9, "refinement objective nonincreasing on 20 random inputs", ok);
}

// 10. CLI determinism: every subcommand, run twice, identical output after
// excluding the runtime column.
#ifdef LOMAC_CLI_PATH
bool run_cli(const std::string& args) {
    const std::string cmd = std::string(LOMAC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

std::string read_without_runtime(const fs::path& path, bool strip_runtime) {
    std::ifstream in(path);
    std::ostringstream kept;
    std::string line;
    while (std::getline(in, line)) {
        if (strip_runtime) {
            std::string field;
            std::istringstream fields(line);
            int idx = 0;
            std::string rebuilt;
            while (std::getline(fields, field, ',')) {
                if (idx != 7) {
                    if (!rebuilt.empty()) rebuilt += ',';
                    rebuilt += field;
                }
                ++idx;
            }
            kept << rebuilt << '\n';
        } else {
            kept << line << '\n';
        }
    }
    return kept.str();
}

void criterion_10() {
    const fs::path dir = fs::temp_directory_path() / "lomac-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string base = (dir / "m.csv").string();

    struct Run {
        std::string name;
        std::string args;       // without --out
        bool strip_runtime;
        std::vector<std::string> suffixes;  // extra files keyed off --out
    };
    const std::vector<Run> runs = {
        {"simulate",
         "simulate --rows 15 --cols 12 --rank 2 --observe-prob 0.6 --noise-level 0.1 "
         "--seed 7 --truth",
         false,
         {"", ".mask.csv", ".truth.csv"}},
        {"complete",
         "complete --in " + base + " --method vmclosure --rank 2 --iterations 16 --seed 3",
         false,
         {""}},
        {"sweep-accuracy",
         "sweep-accuracy --axis observe-prob --values 0.6,0.8 --methods faccro,meanfill "
         "--trials 2 --rows 12 --cols 12 --rank 1 --seed 5",
         true,
         {""}},
        {"sweep-timing",
         "sweep-timing --sizes 10,12 --methods faccro,meanfill --rank 1 --seed 2",
         true,
         {""}},
        {"eval-real",
         "eval-real --in " + base + " --deletions 20 --methods faccro,meanfill --seed 4",
         true,
         {""}},
        {"spectrum",
         "spectrum --rows 15 --cols 15 --rank 2 --observe-prob 0.6 --trials 2 "
         "--gap-count 3 --seed 6",
         false,
         {""}},
    };

    // the complete/eval-real inputs come from one simulate call
    bool ok = run_cli("simulate --rows 15 --cols 12 --rank 1 --observe-prob 0.8 "
                      "--noise-level 0.05 --seed 1 --out " + base);
    std::string failed;
    for (const auto& run : runs) {
        if (!ok) break;
        const std::string out_a = (dir / (run.name + ".a.csv")).string();
        const std::string out_b = (dir / (run.name + ".b.csv")).string();
        if (!run_cli(run.args + " --out " + out_a) ||
            !run_cli(run.args + " --out " + out_b)) {
            ok = false;
            failed = run.name + " (exit status)";
            break;
        }
        for (const auto& suffix : run.suffixes) {
            const auto a = read_without_runtime(out_a + suffix, run.strip_runtime);
            const auto b = read_without_runtime(out_b + suffix, run.strip_runtime);
            if (a.empty() || a != b) {
                ok = false;
                failed = run.name + suffix;
            }
        }
    }
    report(10, "every CLI subcommand is byte-deterministic given the seed", ok, failed);
    fs::remove_all(dir);
}
#endif

// 11. Power-law race-time predictor closed form and composition.
void criterion_11() {
    const double direct = riegel_predict(1200.0, 5000.0, 10000.0);
    const double expected = 1200.0 * std::pow(2.0, 1.06);
    const double via = riegel_predict(riegel_predict(1200.0, 5000.0, 7500.0), 7500.0,
                                      10000.0);
    const bool ok = std::abs(direct - expected) / expected < 1e-9 &&
                    std::abs(via - direct) / direct < 1e-9;
    report(11, "power-law predictor closed form and composition identity", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
#ifdef LOMAC_CLI_PATH
    criterion_10();
#else
    report(10, "every CLI subcommand is byte-deterministic given the seed", false,
           "CLI path not configured");
#endif
    criterion_11();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
