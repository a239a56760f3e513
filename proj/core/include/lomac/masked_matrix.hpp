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

#include <Eigen/Core>
#include <cassert>
#include <utility>
#include <vector>

namespace lomac {

using Index = Eigen::Index;
using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense value grid plus boolean observation mask. Immutable after
/// construction; unobserved positions hold a zero placeholder that must
/// never be read as data (all read paths go through the mask).
class MaskedMatrix {
  public:
    MaskedMatrix(Eigen::MatrixXd values, Mask mask);

    static MaskedMatrix fully_observed(Eigen::MatrixXd values);

    Index rows() const { return values_.rows(); }
    Index cols() const { return values_.cols(); }

    bool observed(Index i, Index j) const { return mask_(i, j); }

    /// Value of an observed entry. Reading an unobserved entry is a
    /// programming error (debug assertion).
    double value(Index i, Index j) const {
        assert(mask_(i, j) && "reading an unobserved entry");
        return values_(i, j);
    }

    /// Full grid with zeros at unobserved positions. For spectral code
    /// that works on the zero-filled matrix; not a way around the mask.
    const Eigen::MatrixXd& values_with_zeros() const { return values_; }
    const Mask& mask() const { return mask_; }

    Index observed_count() const { return mask_.count(); }

    bool all_observed_positive() const;

    /// Throws std::invalid_argument naming the first offending cell when
    /// any observed entry is <= 0. `who` names the requiring algorithm.
    void require_positive(const char* who) const;

    std::vector<std::pair<Index, Index>> observed_positions() const;
    std::vector<std::pair<Index, Index>> unobserved_positions() const;

    /// Copy with additional positions removed from the mask.
    MaskedMatrix without(const std::vector<std::pair<Index, Index>>& positions) const;

  private:
    Eigen::MatrixXd values_;
    Mask mask_;
};

}  // namespace lomac
