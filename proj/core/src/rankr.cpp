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

#include "lomac/rankr.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "lomac/errors.hpp"
#include "lomac/rng.hpp"

namespace lomac {

namespace {

double binomial(Index n, int k) {
    if (k < 0 || static_cast<Index>(k) > n) return 0.0;
    double r = 1.0;
    for (int t = 0; t < k; ++t) r = r * static_cast<double>(n - t) / static_cast<double>(t + 1);
    return r;
}

// All positions of the minor except the bottom-right hole observed?
bool minor_complete(const MaskedMatrix& A, const std::vector<Index>& rows,
                    const std::vector<Index>& cols) {
    const std::size_t last = rows.size() - 1;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
            if (a == last && b == last) continue;
            if (!A.observed(rows[a], cols[b])) return false;
        }
    return true;
}

// Advance a k-combination over [0, n); returns false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int idx = k - 1; idx >= 0; --idx) {
        if (c[static_cast<std::size_t>(idx)] < n - (k - idx)) {
            ++c[static_cast<std::size_t>(idx)];
            for (int t = idx + 1; t < k; ++t)
                c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Index> pick(const std::vector<Index>& pool, const std::vector<int>& combo) {
    std::vector<Index> out;
    out.reserve(combo.size());
    for (int c : combo) out.push_back(pool[static_cast<std::size_t>(c)]);
    return out;
}

double minor_scale(const Eigen::MatrixXd& B) {
    const Index r1 = B.rows();
    double maxabs = 0.0;
    for (Index a = 0; a < r1; ++a)
        for (Index b = 0; b < r1; ++b) {
            if (a == r1 - 1 && b == r1 - 1) continue;  // hole placeholder
            maxabs = std::max(maxabs, std::abs(B(a, b)));
        }
    return std::pow(maxabs + 1.0, static_cast<double>(r1));
}

Eigen::MatrixXd extract_minor(const MaskedMatrix& A, const MinorIndices& m) {
    const auto r1 = static_cast<Index>(m.row_ids.size());
    Eigen::MatrixXd B(r1, r1);
    for (Index a = 0; a < r1; ++a)
        for (Index b = 0; b < r1; ++b) {
            const Index i = m.row_ids[static_cast<std::size_t>(a)];
            const Index j = m.col_ids[static_cast<std::size_t>(b)];
            B(a, b) = (a == r1 - 1 && b == r1 - 1) ? 0.0 : A.value(i, j);
        }
    return B;
}

}  // namespace

std::vector<MinorIndices> find_minors(const MaskedMatrix& A, Index i, Index j, int rhat,
                                      int iterations, std::uint64_t seed) {
    if (rhat < 1 || rhat + 1 > std::min(A.rows(), A.cols()))
        throw std::invalid_argument("find_minors: rank does not fit the matrix");
    if (iterations < 1) throw std::invalid_argument("find_minors: iterations must be >= 1");

    // Rows must supply an observed entry in column j, columns in row i;
    // anything else can never complete the minor.
    std::vector<Index> row_pool, col_pool;
    for (Index k = 0; k < A.rows(); ++k)
        if (k != i && A.observed(k, j)) row_pool.push_back(k);
    for (Index l = 0; l < A.cols(); ++l)
        if (l != j && A.observed(i, l)) col_pool.push_back(l);

    std::vector<MinorIndices> found;
    if (static_cast<int>(row_pool.size()) < rhat || static_cast<int>(col_pool.size()) < rhat)
        return found;

    auto finish = [&](std::vector<Index> rows, std::vector<Index> cols) {
        rows.push_back(i);
        cols.push_back(j);
        found.push_back({std::move(rows), std::move(cols)});
    };

    const double candidates = binomial(static_cast<Index>(row_pool.size()), rhat) *
                              binomial(static_cast<Index>(col_pool.size()), rhat);
    if (candidates <= 1e6) {
        std::vector<int> rc(static_cast<std::size_t>(rhat));
        for (int t = 0; t < rhat; ++t) rc[static_cast<std::size_t>(t)] = t;
        do {
            auto rows = pick(row_pool, rc);
            std::vector<int> cc(static_cast<std::size_t>(rhat));
            for (int t = 0; t < rhat; ++t) cc[static_cast<std::size_t>(t)] = t;
            do {
                auto cols = pick(col_pool, cc);
                if (minor_complete(A, [&] {
                        auto r = rows;
                        r.push_back(i);
                        return r;
                    }(), [&] {
                        auto c = cols;
                        c.push_back(j);
                        return c;
                    }())) {
                    finish(rows, cols);
                    if (static_cast<int>(found.size()) >= iterations) return found;
                }
            } while (next_combination(cc, static_cast<int>(col_pool.size())));
        } while (next_combination(rc, static_cast<int>(row_pool.size())));
        return found;
    }

    // Rejection sampling over uniform row/col subsets.
    Rng rng(seed);
    std::set<std::pair<std::vector<Index>, std::vector<Index>>> seen;
    const long max_rejections = 50L * iterations;
    long rejections = 0;
    auto sample_subset = [&](const std::vector<Index>& pool) {
        std::vector<Index> shuffled = pool;
        for (int t = 0; t < rhat; ++t) {
            std::uniform_int_distribution<std::size_t> d(static_cast<std::size_t>(t),
                                                         shuffled.size() - 1);
            std::swap(shuffled[static_cast<std::size_t>(t)], shuffled[d(rng)]);
        }
        shuffled.resize(static_cast<std::size_t>(rhat));
        std::sort(shuffled.begin(), shuffled.end());
        return shuffled;
    };
    while (static_cast<int>(found.size()) < iterations && rejections < max_rejections) {
        auto rows = sample_subset(row_pool);
        auto cols = sample_subset(col_pool);
        auto key = std::make_pair(rows, cols);
        bool fresh = seen.insert(std::move(key)).second;
        auto full_rows = rows;
        full_rows.push_back(i);
        auto full_cols = cols;
        full_cols.push_back(j);
        if (fresh && minor_complete(A, full_rows, full_cols)) {
            finish(std::move(rows), std::move(cols));
        } else {
            ++rejections;
        }
    }
    return found;
}

MinorSolution solve_minor(const Eigen::MatrixXd& B, double degeneracy_tol) {
    if (B.rows() != B.cols() || B.rows() < 2)
        throw std::invalid_argument("solve_minor: minor must be square, size >= 2");
    Eigen::MatrixXd work = B;
    const Index last = B.rows() - 1;
    work(last, last) = 0.0;
    const double a0 = work.determinant();
    work(last, last) = 1.0;
    const double a1 = work.determinant();
    if (std::abs(a1 - a0) <= degeneracy_tol * minor_scale(B))
        throw DegenerateMinorError("solve_minor: determinant nearly constant in the hole");
    return {a0, a1, -a0 / (a1 - a0)};
}

double minor_weight(double a0, double a1, WeightingMode mode, double tol) {
    const double gap = std::abs(a1 - a0);
    if (gap <= tol) throw DegenerateMinorError("minor_weight: |a1-a0| below tolerance");
    if (mode == WeightingMode::additive) return 1.0 / gap + std::abs(a0) / (gap * gap);
    if (std::abs(a0) <= tol)
        throw DegenerateMinorError("minor_weight: |a0| below tolerance in multiplicative mode");
    return 1.0 / std::abs(a0) + 1.0 / gap;
}

namespace {

EntryEstimate vmclosure_at_rank(const MaskedMatrix& A, Index i, Index j, int rhat,
                                const ClosureConfig& config) {
    const auto minors =
        find_minors(A, i, j, rhat, config.iterations, derive_seed(config.seed, i, j));

    std::vector<Candidate> candidates;
    double inv_sq_sum = 0.0;
    for (const auto& m : minors) {
        const Eigen::MatrixXd B = extract_minor(A, m);
        const double tol = config.degeneracy_tol * minor_scale(B);
        try {
            const auto sol = solve_minor(B, config.degeneracy_tol);
            const double delta = minor_weight(sol.a0, sol.a1, config.weighting_mode, tol);
            candidates.emplace_back(sol.solution, delta);
            inv_sq_sum += 1.0 / (delta * delta);
        } catch (const DegenerateMinorError&) {
            // discard this minor
        }
    }

    if (candidates.empty())
        throw UnestimableError("vmclosure_entry: no usable minor at rank " +
                               std::to_string(rhat));

    EntryEstimate est;
    est.row = i;
    est.col = j;
    est.value = combine_min_variance(candidates);
    est.support = static_cast<int>(candidates.size());
    est.variance_proxy = 1.0 / std::sqrt(inv_sq_sum);
    return est;
}

}  // namespace

EntryEstimate vmclosure_entry(const MaskedMatrix& A, Index i, Index j,
                              const ClosureConfig& config) {
    if (config.target_rank < 1 || config.iterations < 1)
        throw std::invalid_argument("vmclosure_entry: invalid config");
    if (config.weighting_mode == WeightingMode::multiplicative)
        A.require_positive("vmclosure (multiplicative weighting)");

    const int lowest = config.rank_fallback ? 1 : config.target_rank;
    for (int rhat = config.target_rank; rhat >= lowest; --rhat) {
        try {
            if (rhat == 1 && A.all_observed_positive()) return faccro_entry(A, i, j);
            return vmclosure_at_rank(A, i, j, rhat, config);
        } catch (const UnestimableError&) {
            if (rhat == lowest) throw;
        }
    }
    throw UnestimableError("vmclosure_entry: unreachable");
}

Completion vmclosure_all(const MaskedMatrix& A, const ClosureConfig& config) {
    if (A.observed_count() == 0)
        throw std::invalid_argument("vmclosure_all: matrix has no observed entries");

    double mean = 0.0;
    for (auto [i, j] : A.observed_positions()) mean += A.value(i, j);
    mean /= static_cast<double>(A.observed_count());

    Eigen::MatrixXd out = A.values_with_zeros();
    Mask fallback = Mask::Constant(A.rows(), A.cols(), false);
    for (auto [i, j] : A.unobserved_positions()) {
        try {
            out(i, j) = vmclosure_entry(A, i, j, config).value;
        } catch (const UnestimableError&) {
            out(i, j) = mean;
            fallback(i, j) = true;
        }
    }
    return {std::move(out), std::move(fallback)};
}

}  // namespace lomac
