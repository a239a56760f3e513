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

#include <stdexcept>
#include <string>

namespace lomac {

/// An entry has no solving circuit / minor at any allowed rank.
struct UnestimableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A minor whose determinant is numerically constant in the hole variable.
struct DegenerateMinorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A column whose observed mean is zero under column normalization.
struct DegenerateColumnError : std::runtime_error {
    DegenerateColumnError(std::string msg, long col)
        : std::runtime_error(std::move(msg)), column(col) {}
    long column;
};

}  // namespace lomac
