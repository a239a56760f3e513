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
#include <random>

namespace lomac {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for the (i,j)-local stream of a computation with master seed `seed`.
/// Keeps per-entry work reproducible regardless of visiting order.
inline std::uint64_t derive_seed(std::uint64_t seed, long i, long j) {
    return splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL) ^
                      static_cast<std::uint64_t>(j));
}

/// Seed for trial `t` of a sweep.
inline std::uint64_t derive_trial_seed(std::uint64_t seed, long axis_index, long trial) {
    return derive_seed(splitmix64(seed), axis_index, trial);
}

using Rng = std::mt19937_64;

}  // namespace lomac
