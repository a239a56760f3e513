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

#include "lomac/masked_matrix.hpp"
#include "lomac/stats.hpp"

namespace lomac {

/// A dense completion plus the mask of entries that had to be filled by a
/// fallback value (no solving circuit / minor).
struct Completion {
    Eigen::MatrixXd values;
    Mask fallback;
};

/// Fast rank-1 local completion of one entry via length-4 circuits
/// (2x2 minors) in log space, with magnitude weights.
///
/// For each column l != j with A(i,l) observed: over rows k != i where
/// A(k,l) and A(k,j) are both observed, with weights w_k = |A(k,l)|
/// normalized to sum 1, set b_l = exp(sum_k w_k (log A(k,j) - log A(k,l)))
/// and the candidate A(i,l) * b_l. Candidates combine in log space with
/// weights w'_l = |A(i,l)| normalized; an observed A(i,j) joins as an extra
/// candidate with weight |A(i,j)|.
///
/// Requires strictly positive observed entries. Throws UnestimableError
/// when no candidate exists. variance_proxy is 1/support (uncalibrated).
EntryEstimate faccro_entry(const MaskedMatrix& A, Index i, Index j);

/// Whole-matrix fACCRO. Observed entries pass through unchanged; each
/// unobserved estimable entry gets the faccro_entry value (the per-column
/// log ratios b_l are shared across target rows); entries with no solving
/// circuit are filled with the geometric mean of the observed entries and
/// flagged in the returned fallback mask.
Completion faccro_all(const MaskedMatrix& A);

}  // namespace lomac
