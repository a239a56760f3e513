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

#include <vector>

#include "lomac/masked_matrix.hpp"
#include "lomac/rank1.hpp"

namespace lomac {

struct RefineConfig {
    int rank = 2;
    int max_iters = 100;
    double rel_tol = 1e-8;
    double ridge = 0.0;
};

struct RefineResult {
    Eigen::MatrixXd values;
    /// Observed-entry squared residual plus ridge terms, one value per
    /// sweep (nonincreasing).
    std::vector<double> objective;
    bool hit_rank_deficiency = false;
};

/// Spectral matrix completion bootstrap: takes the top-r right singular
/// vectors V of A_init, then re-solves each row of A over its observed
/// columns, filling the unobserved ones with obs_row * pinv(V_obs^T) * V_unobs^T.
/// Observed entries pass through verbatim. Rows without observed entries
/// are copied from A_init and flagged in the returned fallback mask.
Completion smcb(const MaskedMatrix& A, const Eigen::MatrixXd& A_init, int rank);

/// Rank-r refinement: SVD-truncates A_init to rank r, then alternating
/// least squares on the observed-entry squared error (plus optional ridge)
/// until the relative objective change drops below rel_tol or max_iters.
RefineResult refine(const MaskedMatrix& A, const Eigen::MatrixXd& A_init,
                    const RefineConfig& config);

/// Largest relative spectral gap: argmax_k (sigma_k - sigma_{k+1}) /
/// (sigma_{k+1} + tau) over k in [1, max_rank], tau = 1e-12 * sigma_1,
/// ties toward smaller k.
int estimate_rank(const Eigen::MatrixXd& A_filled, int max_rank);

/// [sigma_2 - sigma_3, sigma_3 - sigma_4, ...], `count` entries.
std::vector<double> spectral_gaps(const Eigen::MatrixXd& A_filled, int count);

/// |<v_k(estimate), v_k(truth)>| for the k-th right singular vectors
/// (1-based k; singular vector sign is arbitrary).
double singular_vector_alignment(const Eigen::MatrixXd& estimate,
                                 const Eigen::MatrixXd& truth, int k);

/// Singular values of a dense matrix, nonincreasing.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& A);

/// Best rank-r approximation via truncated SVD.
Eigen::MatrixXd svd_truncate(const Eigen::MatrixXd& A, int rank);

}  // namespace lomac
