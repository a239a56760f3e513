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
#include <string>
#include <vector>

#include "lomac/baselines.hpp"
#include "lomac/masked_matrix.hpp"
#include "lomac/rankr.hpp"
#include "lomac/spectral.hpp"

namespace lomac {

/// Shared knobs for the completion method registry. rank == 0 means
/// "estimate from the initializer's singular value spectrum".
struct MethodContext {
    int rank = 0;
    ClosureConfig closure;
    RefineConfig refine;
    SvtConfig svt;
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> distances;
};

/// Completion methods are named by a spec string:
///   faccro | vmclosure | svt | riegel | meanfill | zerofill | meanfill-svd
///   | optspace-like | smcb(<init>) | mos(<init>)
/// where <init> is itself a method spec; compositions nest, e.g.
/// mos(smcb(faccro)).
bool is_known_method(const std::string& method_spec);

/// Runs a method on A, returning a dense completion. Throws
/// std::invalid_argument for an unknown spec.
Eigen::MatrixXd run_method(const std::string& method_spec, const MaskedMatrix& A,
                           const MethodContext& ctx);

/// The registry's flat method names (without composition arguments).
std::vector<std::string> registered_method_names();

}  // namespace lomac
