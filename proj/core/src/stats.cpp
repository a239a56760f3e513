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

#include "lomac/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lomac/errors.hpp"
#include "lomac/rng.hpp"

namespace lomac {

double combine_min_variance(const std::vector<Candidate>& candidates) {
    if (candidates.empty())
        throw UnestimableError("combine_min_variance: no candidates");
    double wsum = 0.0, acc = 0.0;
    for (const auto& [value, proxy] : candidates) {
        if (!(proxy > 0.0) || !std::isfinite(proxy) || !std::isfinite(value))
            throw std::invalid_argument("combine_min_variance: nonpositive or nonfinite proxy");
        const double w = 1.0 / (proxy * proxy);
        wsum += w;
        acc += w * value;
    }
    return acc / wsum;
}

namespace {

Eigen::VectorXd column_means(const MaskedMatrix& truth, const Mask& norm_mask,
                             const Mask& eval_mask) {
    Eigen::VectorXd means = Eigen::VectorXd::Zero(truth.cols());
    for (Index j = 0; j < truth.cols(); ++j) {
        double sum = 0.0;
        Index count = 0;
        bool evaluated = false;
        for (Index i = 0; i < truth.rows(); ++i) {
            if (norm_mask(i, j)) {
                sum += truth.values_with_zeros()(i, j);
                ++count;
            }
            evaluated = evaluated || eval_mask(i, j);
        }
        if (evaluated) {
            if (count == 0 || sum == 0.0)
                throw DegenerateColumnError(
                    "masked_mse: zero observed column mean in column " + std::to_string(j),
                    static_cast<long>(j));
            means(j) = sum / static_cast<double>(count);
        }
    }
    return means;
}

}  // namespace

std::vector<double> masked_squared_errors(const MaskedMatrix& truth,
                                          const Eigen::MatrixXd& estimate,
                                          const Mask& eval_mask, bool column_normalize,
                                          const std::optional<Mask>& norm_mask) {
    if (truth.rows() != estimate.rows() || truth.cols() != estimate.cols() ||
        truth.rows() != eval_mask.rows() || truth.cols() != eval_mask.cols())
        throw std::invalid_argument("masked_mse: dimension mismatch");
    if (eval_mask.count() == 0)
        throw std::invalid_argument("masked_mse: empty evaluation mask");

    const Mask& nm = norm_mask ? *norm_mask : truth.mask();
    Eigen::VectorXd means;
    if (column_normalize) means = column_means(truth, nm, eval_mask);

    std::vector<double> errors;
    errors.reserve(static_cast<std::size_t>(eval_mask.count()));
    for (Index i = 0; i < truth.rows(); ++i)
        for (Index j = 0; j < truth.cols(); ++j)
            if (eval_mask(i, j)) {
                double t = truth.values_with_zeros()(i, j);
                double e = estimate(i, j);
                if (column_normalize) {
                    t /= means(j);
                    e /= means(j);
                }
                errors.push_back((e - t) * (e - t));
            }
    return errors;
}

double masked_mse(const MaskedMatrix& truth, const Eigen::MatrixXd& estimate,
                  const Mask& eval_mask, bool column_normalize,
                  const std::optional<Mask>& norm_mask) {
    const auto errors =
        masked_squared_errors(truth, estimate, eval_mask, column_normalize, norm_mask);
    double sum = 0.0;
    for (double e : errors) sum += e;
    return sum / static_cast<double>(errors.size());
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& squared_errors,
                                       int iterations, std::uint64_t seed) {
    if (squared_errors.empty())
        throw std::invalid_argument("bootstrap_ci: empty error list");
    if (iterations < 1)
        throw std::invalid_argument("bootstrap_ci: iterations must be >= 1");

    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, squared_errors.size() - 1);
    const double n = static_cast<double>(squared_errors.size());

    double sum = 0.0, sumsq = 0.0;
    for (int it = 0; it < iterations; ++it) {
        double acc = 0.0;
        for (std::size_t k = 0; k < squared_errors.size(); ++k)
            acc += squared_errors[pick(rng)];
        const double mean = acc / n;
        sum += mean;
        sumsq += mean * mean;
    }
    const double m = sum / iterations;
    const double var = std::max(0.0, sumsq / iterations - m * m);
    const double sigma = std::sqrt(var);
    return {m - 2.0 * sigma, m + 2.0 * sigma};
}

}  // namespace lomac
