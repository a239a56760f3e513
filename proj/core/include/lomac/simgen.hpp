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
#include <utility>
#include <vector>

#include "lomac/masked_matrix.hpp"

namespace lomac {

enum class NoiseKind { multiplicative, additive };

/// One synthetic draw configuration: positive rank-r truth U V^T with
/// entrywise |N(0,1)| factors, multiplicative exp(eps*z) or additive
/// eps*|z| noise, and a Bernoulli(p) observation mask.
struct SimConfig {
    Index rows = 50;
    Index cols = 50;
    int rank = 2;
    double observe_prob = 0.5;
    double noise_level = 0.0;
    NoiseKind noise_kind = NoiseKind::multiplicative;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SimDraw {
    Eigen::MatrixXd truth;  // U V^T, fully known
    MaskedMatrix observed;  // noisy, masked
    SimConfig config;
};

/// Deterministic given config.seed. Draw order is sequential from a single
/// generator: U row-major, then V row-major, then the noise grid row-major,
/// then the mask row-major; changing dimensions perturbs later draws.
SimDraw draw(const SimConfig& config);

/// Uniformly removes `count` observed positions without replacement.
/// Returns the reduced matrix and the mask of deleted positions.
std::pair<MaskedMatrix, Mask> delete_entries(const MaskedMatrix& matrix, Index count,
                                             std::uint64_t seed);

}  // namespace lomac
