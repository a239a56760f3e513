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
#include <optional>
#include <utility>
#include <vector>

#include "lomac/masked_matrix.hpp"

namespace lomac {

/// A completed value for one position plus its variance proxy and the
/// number of circuits/minors that were combined into it.
struct EntryEstimate {
    Index row = 0;
    Index col = 0;
    double value = 0.0;
    double variance_proxy = 0.0;
    int support = 0;
};

/// One candidate for a minimum-variance combination: (value, variance proxy).
using Candidate = std::pair<double, double>;

/// Inverse-squared-proxy weighted combination: returns sum_k q(k) * value_k
/// with q(k) proportional to 1/proxy_k^2 and sum q = 1. Covariances between
/// candidates are neglected.
double combine_min_variance(const std::vector<Candidate>& candidates);

/// Mean squared difference between truth and estimate over eval_mask.
/// With column_normalize, both are first divided by the per-column mean of
/// the truth entries selected by `norm_mask` (defaults to truth's own mask).
double masked_mse(const MaskedMatrix& truth, const Eigen::MatrixXd& estimate,
                  const Mask& eval_mask, bool column_normalize,
                  const std::optional<Mask>& norm_mask = std::nullopt);

/// Per-entry squared errors over eval_mask, row-major order, with the same
/// normalization convention as masked_mse. Feeds bootstrap_ci.
std::vector<double> masked_squared_errors(const MaskedMatrix& truth,
                                          const Eigen::MatrixXd& estimate,
                                          const Mask& eval_mask, bool column_normalize,
                                          const std::optional<Mask>& norm_mask = std::nullopt);

/// Bootstrap mean +- 2 sigma interval: resamples the list with replacement
/// `iterations` times, takes the mean of each resample, returns
/// (mean - 2*sigma, mean + 2*sigma) over those resample means.
std::pair<double, double> bootstrap_ci(const std::vector<double>& squared_errors,
                                       int iterations, std::uint64_t seed);

}  // namespace lomac
