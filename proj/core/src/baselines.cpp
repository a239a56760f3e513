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

#include "lomac/baselines.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lomac/rng.hpp"
#include "lomac/simgen.hpp"
#include "lomac/spectral.hpp"

namespace lomac {

void SvtConfig::validate() const {
    for (double l : lambda_grid)
        if (!(l > 0.0)) throw std::invalid_argument("SvtConfig: nonpositive lambda");
    if (!(holdout_fraction > 0.0) || !(holdout_fraction < 1.0))
        throw std::invalid_argument("SvtConfig: holdout_fraction must be in (0,1)");
    if (max_iters < 1 || !(rel_tol > 0.0) || !(step > 0.0))
        throw std::invalid_argument("SvtConfig: invalid iteration parameters");
}

Eigen::MatrixXd shrink_singular_values(const Eigen::MatrixXd& X, double threshold) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();
    for (Eigen::Index k = 0; k < s.size(); ++k) s(k) = std::max(0.0, s(k) - threshold);
    return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

namespace {

Eigen::MatrixXd svt_iterate(const MaskedMatrix& data, double lambda, double step,
                            int max_iters, double rel_tol) {
    Eigen::MatrixXd x = data.values_with_zeros();  // zero-filled start
    for (int it = 0; it < max_iters; ++it) {
        Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(x.rows(), x.cols());
        for (Index i = 0; i < x.rows(); ++i)
            for (Index j = 0; j < x.cols(); ++j)
                if (data.observed(i, j)) grad(i, j) = x(i, j) - data.value(i, j);
        Eigen::MatrixXd next = shrink_singular_values(x - step * grad, lambda * step);
        const double change = (next - x).norm();
        const double scale = std::max(x.norm(), 1e-12);
        x = std::move(next);
        if (change <= rel_tol * scale) break;
    }
    return x;
}

double holdout_mse(const MaskedMatrix& A, const Mask& holdout, const Eigen::MatrixXd& x) {
    double acc = 0.0;
    Index n = 0;
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            if (holdout(i, j)) {
                const double r = x(i, j) - A.value(i, j);
                acc += r * r;
                ++n;
            }
    return acc / static_cast<double>(n);
}

}  // namespace

Eigen::MatrixXd svt_complete(const MaskedMatrix& A, const SvtConfig& config,
                             std::uint64_t seed) {
    config.validate();
    if (A.observed_count() < 2)
        throw std::invalid_argument("svt_complete: need at least 2 observed entries");

    std::vector<double> grid = config.lambda_grid;
    if (grid.empty()) {
        const double s1 = singular_values(A.values_with_zeros())(0);
        for (int k = 0; k < 8; ++k)
            grid.push_back(s1 * std::pow(10.0, -3.0 + 3.0 * k / 7.0));
    }

    const auto holdout_count = static_cast<Index>(
        std::max<double>(1.0, std::floor(config.holdout_fraction *
                                         static_cast<double>(A.observed_count()))));
    if (holdout_count >= A.observed_count())
        throw std::invalid_argument("svt_complete: holdout leaves no training entries");
    auto [train, held] = delete_entries(A, holdout_count, seed);

    double best_mse = std::numeric_limits<double>::infinity();
    double best_lambda = grid.front();
    for (double lambda : grid) {
        const Eigen::MatrixXd x =
            svt_iterate(train, lambda, config.step, config.max_iters, config.rel_tol);
        const double mse = holdout_mse(A, held, x);
        if (mse < best_mse) {
            best_mse = mse;
            best_lambda = lambda;
        }
    }
    return svt_iterate(A, best_lambda, config.step, config.max_iters, config.rel_tol);
}

double riegel_predict(double t1_seconds, double d1_meters, double d2_meters) {
    if (!(t1_seconds > 0.0) || !(d1_meters > 0.0) || !(d2_meters > 0.0))
        throw std::invalid_argument("riegel_predict: inputs must be positive");
    return t1_seconds * std::pow(d2_meters / d1_meters, 1.06);
}

Completion riegel_complete(const MaskedMatrix& A, const std::vector<double>& distances) {
    if (static_cast<Index>(distances.size()) != A.cols())
        throw std::invalid_argument("riegel_complete: one distance per column required");
    for (double d : distances)
        if (!(d > 0.0)) throw std::invalid_argument("riegel_complete: nonpositive distance");

    Eigen::MatrixXd out = A.values_with_zeros();
    Mask fallback = Mask::Constant(A.rows(), A.cols(), false);
    for (Index i = 0; i < A.rows(); ++i) {
        for (Index j = 0; j < A.cols(); ++j) {
            if (A.observed(i, j)) continue;
            Index anchor = -1;
            for (Index l = 0; l < A.cols(); ++l) {
                if (l == j || !A.observed(i, l)) continue;
                if (anchor < 0) {
                    anchor = l;
                    continue;
                }
                const double da = std::abs(distances[static_cast<std::size_t>(l)] -
                                           distances[static_cast<std::size_t>(j)]);
                const double db = std::abs(distances[static_cast<std::size_t>(anchor)] -
                                           distances[static_cast<std::size_t>(j)]);
                if (da < db || (da == db && distances[static_cast<std::size_t>(l)] <
                                                distances[static_cast<std::size_t>(anchor)]))
                    anchor = l;
            }
            if (anchor < 0) {
                fallback(i, j) = true;
                continue;
            }
            out(i, j) = riegel_predict(A.value(i, anchor),
                                       distances[static_cast<std::size_t>(anchor)],
                                       distances[static_cast<std::size_t>(j)]);
        }
    }
    return {std::move(out), std::move(fallback)};
}

}  // namespace lomac
