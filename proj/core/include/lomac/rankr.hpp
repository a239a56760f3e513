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
#include "lomac/stats.hpp"

namespace lomac {

enum class WeightingMode { additive, multiplicative };

/// vm-Closure knobs. `iterations` caps the number of minors sampled per
/// entry; with rank_fallback the target rank decreases when no minor
/// survives, bottoming out at the rank-1 fACCRO estimator.
struct ClosureConfig {
    int target_rank = 2;
    int iterations = 32;
    double degeneracy_tol = 1e-12;
    WeightingMode weighting_mode = WeightingMode::multiplicative;
    bool rank_fallback = true;
    std::uint64_t seed = 0;
};

/// Index sets of one almost-complete (r+1)x(r+1) minor through the target:
/// sorted, with the target row/column last (hole at the bottom-right).
struct MinorIndices {
    std::vector<Index> row_ids;
    std::vector<Index> col_ids;
};

/// Solved minor: determinants with the hole set to 0 and to 1, and the
/// root of the (affine) determinant, solution = -a0 / (a1 - a0).
struct MinorSolution {
    double a0 = 0.0;
    double a1 = 0.0;
    double solution = 0.0;
};

/// Up to `iterations` distinct almost-complete (rhat+1)x(rhat+1) minors
/// through (i,j): all positions observed except (i,j). Exhaustive
/// enumeration when the candidate count stays under 1e6, rejection
/// sampling otherwise (capped at 50*iterations rejections). Deterministic
/// given seed. An empty list is a valid return.
std::vector<MinorIndices> find_minors(const MaskedMatrix& A, Index i, Index j, int rhat,
                                      int iterations, std::uint64_t seed);

/// Solves the hole of an almost-complete minor whose hole is the
/// bottom-right entry. Throws DegenerateMinorError when |a1 - a0| falls
/// below degeneracy_tol * (max|entry| + 1)^(r+1).
MinorSolution solve_minor(const Eigen::MatrixXd& B, double degeneracy_tol = 1e-12);

/// First-order variance proxy of a minor solution:
///   additive        1/|a1-a0| + |a0|/(a1-a0)^2
///   multiplicative  1/|a0|    + 1/|a1-a0|
double minor_weight(double a0, double a1, WeightingMode mode, double tol = 0.0);

/// Variance-minimizing combination of the surviving minor solutions,
/// q(k) proportional to 1/deltaB_k^2. variance_proxy is
/// (sum_k 1/deltaB_k^2)^(-1/2). Falls back in rank when configured.
EntryEstimate vmclosure_entry(const MaskedMatrix& A, Index i, Index j,
                              const ClosureConfig& config);

/// Entry-wise vm-Closure over all unobserved positions; unestimable
/// entries are filled with the observed-entry mean and flagged.
Completion vmclosure_all(const MaskedMatrix& A, const ClosureConfig& config);

}  // namespace lomac
