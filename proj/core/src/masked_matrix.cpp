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

#include "lomac/masked_matrix.hpp"

#include <stdexcept>
#include <string>

namespace lomac {

MaskedMatrix::MaskedMatrix(Eigen::MatrixXd values, Mask mask)
    : values_(std::move(values)), mask_(std::move(mask)) {
    if (values_.rows() != mask_.rows() || values_.cols() != mask_.cols())
        throw std::invalid_argument("MaskedMatrix: values and mask dimensions differ");
    values_ = mask_.select(values_, Eigen::MatrixXd::Zero(values_.rows(), values_.cols()));
}

MaskedMatrix MaskedMatrix::fully_observed(Eigen::MatrixXd values) {
    Mask mask = Mask::Constant(values.rows(), values.cols(), true);
    return {std::move(values), std::move(mask)};
}

bool MaskedMatrix::all_observed_positive() const {
    for (Index j = 0; j < cols(); ++j)
        for (Index i = 0; i < rows(); ++i)
            if (mask_(i, j) && !(values_(i, j) > 0.0)) return false;
    return true;
}

void MaskedMatrix::require_positive(const char* who) const {
    for (Index j = 0; j < cols(); ++j)
        for (Index i = 0; i < rows(); ++i)
            if (mask_(i, j) && !(values_(i, j) > 0.0))
                throw std::invalid_argument(std::string(who) +
                                            ": nonpositive observed entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

std::vector<std::pair<Index, Index>> MaskedMatrix::observed_positions() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(static_cast<std::size_t>(observed_count()));
    for (Index i = 0; i < rows(); ++i)
        for (Index j = 0; j < cols(); ++j)
            if (mask_(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<Index, Index>> MaskedMatrix::unobserved_positions() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index i = 0; i < rows(); ++i)
        for (Index j = 0; j < cols(); ++j)
            if (!mask_(i, j)) out.emplace_back(i, j);
    return out;
}

MaskedMatrix MaskedMatrix::without(
    const std::vector<std::pair<Index, Index>>& positions) const {
    Mask reduced = mask_;
    for (auto [i, j] : positions) reduced(i, j) = false;
    return {values_, std::move(reduced)};
}

}  // namespace lomac
