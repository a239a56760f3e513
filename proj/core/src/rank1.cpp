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

#include "lomac/rank1.hpp"

#include <cmath>
#include <stdexcept>

#include "lomac/errors.hpp"

namespace lomac {

namespace {

double geometric_mean_observed(const MaskedMatrix& A) {
    double acc = 0.0;
    Index count = 0;
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            if (A.observed(i, j)) {
                acc += std::log(A.value(i, j));
                ++count;
            }
    if (count == 0) throw std::invalid_argument("faccro: matrix has no observed entries");
    return std::exp(acc / static_cast<double>(count));
}

}  // namespace

EntryEstimate faccro_entry(const MaskedMatrix& A, Index i, Index j) {
    A.require_positive("faccro");
    if (i < 0 || i >= A.rows() || j < 0 || j >= A.cols())
        throw std::invalid_argument("faccro_entry: index out of range");

    double log_acc = 0.0;
    double weight_sum = 0.0;
    int support = 0;

    for (Index l = 0; l < A.cols(); ++l) {
        if (l == j || !A.observed(i, l)) continue;
        double ratio_acc = 0.0;
        double row_weight_sum = 0.0;
        for (Index k = 0; k < A.rows(); ++k) {
            if (k == i || !A.observed(k, l) || !A.observed(k, j)) continue;
            const double w = std::abs(A.value(k, l));
            ratio_acc += w * (std::log(A.value(k, j)) - std::log(A.value(k, l)));
            row_weight_sum += w;
        }
        if (row_weight_sum == 0.0) continue;  // no complete 2x2 through (i,l),(.,j)
        const double log_b = ratio_acc / row_weight_sum;
        const double w = std::abs(A.value(i, l));
        log_acc += w * (std::log(A.value(i, l)) + log_b);
        weight_sum += w;
        ++support;
    }

    if (A.observed(i, j)) {
        const double w = std::abs(A.value(i, j));
        log_acc += w * std::log(A.value(i, j));
        weight_sum += w;
        ++support;
    }

    if (support == 0)
        throw UnestimableError("faccro_entry: no solving circuit through (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");

    EntryEstimate est;
    est.row = i;
    est.col = j;
    est.value = std::exp(log_acc / weight_sum);
    est.support = support;
    est.variance_proxy = 1.0 / static_cast<double>(support);
    return est;
}

Completion faccro_all(const MaskedMatrix& A) {
    A.require_positive("faccro");
    const double fallback_value = geometric_mean_observed(A);

    Eigen::MatrixXd out = A.values_with_zeros();
    Mask fallback = Mask::Constant(A.rows(), A.cols(), false);

    // Log grid of observed entries; unobserved cells unused.
    Eigen::MatrixXd logs(A.rows(), A.cols());
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            logs(i, j) = A.observed(i, j) ? std::log(A.value(i, j)) : 0.0;

    for (Index j = 0; j < A.cols(); ++j) {
        bool any_missing = false;
        for (Index i = 0; i < A.rows(); ++i) any_missing |= !A.observed(i, j);
        if (!any_missing) continue;

        // Column-pair log ratios, shared by every target row in column j.
        // A target row i is unobserved at (i,j), so it never contributes
        // to these sums; the per-entry k != i exclusion is automatic.
        Eigen::VectorXd log_b(A.cols());
        Eigen::Array<bool, Eigen::Dynamic, 1> has_b(A.cols());
        for (Index l = 0; l < A.cols(); ++l) {
            has_b(l) = false;
            if (l == j) continue;
            double acc = 0.0, wsum = 0.0;
            for (Index k = 0; k < A.rows(); ++k) {
                if (!A.observed(k, l) || !A.observed(k, j)) continue;
                const double w = std::abs(A.value(k, l));
                acc += w * (logs(k, j) - logs(k, l));
                wsum += w;
            }
            if (wsum > 0.0) {
                log_b(l) = acc / wsum;
                has_b(l) = true;
            }
        }

        for (Index i = 0; i < A.rows(); ++i) {
            if (A.observed(i, j)) continue;
            double log_acc = 0.0, wsum = 0.0;
            for (Index l = 0; l < A.cols(); ++l) {
                if (!has_b(l) || !A.observed(i, l)) continue;
                const double w = std::abs(A.value(i, l));
                log_acc += w * (logs(i, l) + log_b(l));
                wsum += w;
            }
            if (wsum > 0.0) {
                out(i, j) = std::exp(log_acc / wsum);
            } else {
                out(i, j) = fallback_value;
                fallback(i, j) = true;
            }
        }
    }

    return {std::move(out), std::move(fallback)};
}

}  // namespace lomac
