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
#include <vector>

#include "lomac/masked_matrix.hpp"
#include "lomac/rank1.hpp"

namespace lomac {

/// Soft-thresholded nuclear-norm completion with lambda chosen by
/// holdout cross-validation. Empty lambda_grid means the default grid of
/// 8 log-spaced values spanning [1e-3, 1] * sigma_1(zero-filled input).
struct SvtConfig {
    std::vector<double> lambda_grid;
    double holdout_fraction = 0.2;
    int max_iters = 300;
    double rel_tol = 1e-5;
    double step = 1.0;

    void validate() const;
};

/// Soft-threshold the singular values of X by `threshold` (one proximal
/// application of the nuclear norm).
Eigen::MatrixXd shrink_singular_values(const Eigen::MatrixXd& X, double threshold);

/// Proximal-gradient nuclear-norm completion:
///   x <- shrink_{lambda*step}( x - step * P_obs(x - A) )
/// For each lambda in the grid a holdout split (seeded) scores the fit;
/// the winning lambda is refit on all observed entries.
Eigen::MatrixXd svt_complete(const MaskedMatrix& A, const SvtConfig& config,
                             std::uint64_t seed);

/// Power-law race-time prediction, t1 * (d2/d1)^1.06.
double riegel_predict(double t1_seconds, double d1_meters, double d2_meters);

/// Fills each missing (i,j) with riegel_predict from the observed entry of
/// row i whose column distance is nearest to distances[j] (ties toward the
/// shorter distance). Rows with no observed entry are flagged.
Completion riegel_complete(const MaskedMatrix& A, const std::vector<double>& distances);

}  // namespace lomac
