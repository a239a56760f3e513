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

#include <iosfwd>
#include <string>

#include "lomac/masked_matrix.hpp"

namespace lomac {

/// Matrix CSV: one row per matrix row, comma-separated; a missing entry is
/// an empty field or the literal `NaN`. No header unless skip_header.
MaskedMatrix read_matrix_csv(std::istream& in, bool skip_header = false);
MaskedMatrix read_matrix_csv_file(const std::string& path, bool skip_header = false);

void write_matrix_csv(std::ostream& out, const MaskedMatrix& m);
void write_matrix_csv_file(const std::string& path, const MaskedMatrix& m);
void write_dense_csv(std::ostream& out, const Eigen::MatrixXd& m);
void write_dense_csv_file(const std::string& path, const Eigen::MatrixXd& m);

/// Sidecar mask CSV of 0/1, same shape as the matrix.
Mask read_mask_csv(std::istream& in);
Mask read_mask_csv_file(const std::string& path);
void write_mask_csv(std::ostream& out, const Mask& mask);
void write_mask_csv_file(const std::string& path, const Mask& mask);

/// Shortest decimal form that round-trips a double.
std::string format_double(double v);

}  // namespace lomac
