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

#include "lomac/simgen.hpp"

#include <cmath>
#include <stdexcept>

#include "lomac/rng.hpp"

namespace lomac {

void SimConfig::validate() const {
    if (rows < 1 || cols < 1) throw std::invalid_argument("SimConfig: empty dimensions");
    if (rank < 1 || rank > std::min(rows, cols))
        throw std::invalid_argument("SimConfig: rank must be in [1, min(m,n)]");
    if (!(observe_prob > 0.0) || observe_prob > 1.0)
        throw std::invalid_argument("SimConfig: observe_prob must be in (0,1]");
    if (noise_level < 0.0) throw std::invalid_argument("SimConfig: negative noise level");
}

SimDraw draw(const SimConfig& config) {
    config.validate();
    Rng rng(config.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::bernoulli_distribution observe(config.observe_prob);

    Eigen::MatrixXd factor_u(config.rows, config.rank);
    for (Index i = 0; i < config.rows; ++i)
        for (int k = 0; k < config.rank; ++k) factor_u(i, k) = std::abs(normal(rng));
    Eigen::MatrixXd factor_v(config.cols, config.rank);
    for (Index j = 0; j < config.cols; ++j)
        for (int k = 0; k < config.rank; ++k) factor_v(j, k) = std::abs(normal(rng));

    Eigen::MatrixXd truth = factor_u * factor_v.transpose();

    Eigen::MatrixXd noisy(config.rows, config.cols);
    for (Index i = 0; i < config.rows; ++i)
        for (Index j = 0; j < config.cols; ++j) {
            const double z = normal(rng);
            noisy(i, j) = config.noise_kind == NoiseKind::multiplicative
                              ? truth(i, j) * std::exp(config.noise_level * z)
                              : truth(i, j) + config.noise_level * std::abs(z);
        }

    Mask mask(config.rows, config.cols);
    for (Index i = 0; i < config.rows; ++i)
        for (Index j = 0; j < config.cols; ++j) mask(i, j) = observe(rng);

    return {std::move(truth), MaskedMatrix(std::move(noisy), std::move(mask)), config};
}

std::pair<MaskedMatrix, Mask> delete_entries(const MaskedMatrix& matrix, Index count,
                                             std::uint64_t seed) {
    auto positions = matrix.observed_positions();
    if (count < 0 || count > static_cast<Index>(positions.size()))
        throw std::invalid_argument("delete_entries: count exceeds observed population");

    Rng rng(seed);
    // Partial Fisher-Yates: the first `count` slots end up a uniform sample.
    for (Index k = 0; k < count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(k),
                                                        positions.size() - 1);
        std::swap(positions[static_cast<std::size_t>(k)], positions[pick(rng)]);
    }
    positions.resize(static_cast<std::size_t>(count));

    Mask deleted = Mask::Constant(matrix.rows(), matrix.cols(), false);
    for (auto [i, j] : positions) deleted(i, j) = true;
    return {matrix.without(positions), std::move(deleted)};
}

}  // namespace lomac
